#pragma once

#include <vector>

#include "birack/finite_birack.hpp"

namespace birack {

// All biracks of the given order up to isomorphism, as canonical matrices
// (minimal under simultaneous element relabeling). Backtracking over table
// entries with row/column bijectivity pruning; exact for small orders
// (intended for order <= 4).
std::vector<std::vector<std::vector<int>>> birack_census(int order);

// The canonical (minimal) matrix of a birack under relabeling by all
// permutations of its elements.
std::vector<std::vector<int>> canonical_matrix(const FiniteBirack& X);

}  // namespace birack
