#pragma once

#include <vector>

#include "birack/cocycle.hpp"
#include "birack/diagram.hpp"
#include "birack/finite_birack.hpp"
#include "birack/hom.hpp"

namespace birack {

// An assignment of birack elements (1-indexed) to semiarcs satisfying the
// crossing relations everywhere.
struct Labeling {
    std::vector<int> assignment;

    bool operator==(const Labeling&) const = default;
    auto operator<=>(const Labeling&) const = default;
};

// The propagation engine: enumerate labelings over an `alphabet`-letter
// set where crossing k of L.crossings() uses ops[k]. Branches on the
// lowest unlabeled semiarc and propagates forced labels through B, B^-1,
// S, S^-1 and the diagonal (kink) rules; output is sorted.
std::vector<Labeling> enumerate_with_ops(const LinkDiagram& L, int alphabet,
                                         const std::vector<const CrossingOps*>& ops);
long long count_with_ops(const LinkDiagram& L, int alphabet,
                         const std::vector<const CrossingOps*>& ops);

// All X-labelings of L, in lexicographic order.
std::vector<Labeling> enumerate_labelings(const LinkDiagram& L, const FiniteBirack& X);

// Exhaustive-filtration oracle; throws CapExceeded if |X|^semiarcs > cap.
std::vector<Labeling> brute_force_labelings(const LinkDiagram& L, const FiniteBirack& X,
                                            long long cap = 10000000);

// Semiarc-wise composition p∘f; valid over p's target by the hom property.
Labeling project_labeling(const Labeling& f, const BirackHom& p);

// |L_S(f)|: the number of bead labelings of the X-labeled diagram (L, f),
// counted with the same propagation engine using D_{x,y} selected by f.
long long count_bead_labelings(const LinkDiagram& L, const FiniteBirack& X, const Labeling& f,
                               const DynamicalCocycle& D);

}  // namespace birack
