#pragma once

#include <vector>

#include "birack/finite_birack.hpp"
#include "birack/hom.hpp"

namespace birack {

// A birack dynamical cocycle over a base birack X: a family of invertible
// maps D_{x,y} on bead pairs, one per (x,y) in X x X, satisfying the
// labeled analogues of the birack axioms plus the kink-orbit condition
// (axiom (v)), checked as: the kink map of the semidirect product X ⋊_D S,
// iterated rank(X) times, is the identity.
//
// Instances are created through the validating factories and are immutable;
// the semidirect birack and its projection hom are built during validation
// and cached.
class DynamicalCocycle {
public:
    const FiniteBirack& base() const { return base_; }
    int bead_count() const { return beads_; }

    int d1(int x, int y, int a, int b) const { return pair_ops_[pair_index(x, y)].b1(a, b); }
    int d2(int x, int y, int a, int b) const { return pair_ops_[pair_index(x, y)].b2(a, b); }
    const CrossingOps& pair_ops(int x, int y) const { return pair_ops_[pair_index(x, y)]; }

    const FiniteBirack& semidirect() const { return semidirect_; }
    const BirackHom& projection() const { return projection_; }

    bool is_constant() const;

    // d1/d2 flat tables indexed (((x-1)n + (y-1))m + (a-1))m + (b-1),
    // values in 1..m. Throws CocycleViolation with the failed axiom
    // ("i".."v") and a witness tuple.
    static DynamicalCocycle validate(const FiniteBirack& base, int beads,
                                     const std::vector<int>& d1, const std::vector<int>& d2);

    // D_{x,y} = C for all (x,y); valid iff rank(C) divides rank(base).
    static DynamicalCocycle constant(const FiniteBirack& base, const FiniteBirack& c);

    // X-module cocycle D_{x,y}(a,b) = (s_{x,y} a + t_{x,y} b, r_{x,y} a)
    // over Z_beads (beads encoded a_i = i-1). T, S, R are |X| x |X|
    // residue matrices; t and r entries must be invertible mod beads.
    static DynamicalCocycle module(const FiniteBirack& base, int beads,
                                   const std::vector<std::vector<int>>& T,
                                   const std::vector<std::vector<int>>& S,
                                   const std::vector<std::vector<int>>& R);

    // The raw tables of the module formula, before validation (the
    // semidirect of these tables equals the product construction when the
    // entries are constant, whether or not axiom (v) holds).
    static std::pair<std::vector<int>, std::vector<int>> module_tables(
        int base_size, int beads, const std::vector<std::vector<int>>& T,
        const std::vector<std::vector<int>>& S, const std::vector<std::vector<int>>& R);

private:
    DynamicalCocycle(FiniteBirack base, int beads, std::vector<CrossingOps> pair_ops,
                     FiniteBirack semidirect, BirackHom projection);

    int pair_index(int x, int y) const { return (x - 1) * base_.size() + (y - 1); }

    FiniteBirack base_;
    int beads_;
    std::vector<CrossingOps> pair_ops_;
    FiniteBirack semidirect_;
    BirackHom projection_;
};

// The birack X ⋊_D S on |X|·|S| elements, pair-encoded (x,a) -> (x-1)|S| + a.
FiniteBirack semidirect(const DynamicalCocycle& D);

}  // namespace birack
