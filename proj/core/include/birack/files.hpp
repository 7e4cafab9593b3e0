#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "birack/cocycle.hpp"
#include "birack/finite_birack.hpp"

namespace birack {

// Birack file: '#' comment lines; first non-comment line n; then n lines
// of 2n whitespace-separated integers in 1..n (a literal '|' between
// columns n and n+1 is permitted and ignored).
FiniteBirack read_birack(std::istream& in);
FiniteBirack read_birack_file(const std::string& path);
void write_birack(std::ostream& out, const FiniteBirack& X);

// Hom file: one line of |X| integers, the i-th being the target index of x_i.
std::vector<int> read_hom(std::istream& in);
std::vector<int> read_hom_file(const std::string& path);

// Cocycle file, two dialects distinguished by the header keyword:
//   cocycle |X|=<n> |S|=<m>   followed, for each (x,y) row-major, by an
//                             m-row block of 2m integers (birack layout)
//   module n=<beads>          followed by three |X| x |X| matrices labeled
//                             T, S, R (residues mod beads)
DynamicalCocycle read_cocycle(std::istream& in, const FiniteBirack& base);
DynamicalCocycle read_cocycle_file(const std::string& path, const FiniteBirack& base);
void write_cocycle(std::ostream& out, const DynamicalCocycle& D);

}  // namespace birack
