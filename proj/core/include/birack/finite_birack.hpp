#pragma once

#include <vector>

#include "birack/errors.hpp"

namespace birack {

// Table of an n x n binary operation on {1..n}. Arguments and values are
// 1-indexed throughout, mirroring the usual matrix presentation.
class OpTable {
public:
    OpTable() = default;
    OpTable(int n, std::vector<int> data);

    int n() const { return n_; }
    int operator()(int x, int y) const { return data_[(x - 1) * n_ + (y - 1)]; }
    int& at(int x, int y) { return data_[(x - 1) * n_ + (y - 1)]; }
    const std::vector<int>& data() const { return data_; }

private:
    int n_ = 0;
    std::vector<int> data_;
};

// Everything the labeling engine needs to push labels through one crossing:
// the pair map B with inverse, the sideways map S with inverse, and the
// diagonal compositions used at kinks. For a birack there is one of these;
// a dynamical cocycle carries one per pair of base labels.
struct CrossingOps {
    int n = 0;
    OpTable b1, b2;    // B(x,y) = (b1, b2)
    OpTable b1i, b2i;  // B^{-1}
    OpTable s1, s2;    // S, defined by S(B1(x,y), x) = (B2(x,y), y)
    OpTable s1i, s2i;  // S^{-1}
    // (S Δ) and (S^{-1} Δ) component permutations and their inverses,
    // stored as vectors indexed by x-1 with 1-indexed values.
    std::vector<int> sd1, sd2, sdi1, sdi2;
    std::vector<int> sd1_inv, sd2_inv, sdi1_inv, sdi2_inv;

    bool table_equals(const CrossingOps& other) const {
        return n == other.n && b1.data() == other.b1.data() && b2.data() == other.b2.data();
    }
};

// Validates b1/b2 as an invertible pair map with sideways structure and
// bijective diagonals (birack axioms (i) and (ii)); does not check the
// Yang-Baxter equation. Throws AxiomViolation / SidewaysUndefined /
// SidewaysNotInvertible.
CrossingOps derive_crossing_ops(int n, OpTable b1, OpTable b2);

// The sideways tables for a pair map, as a standalone operation.
// Returns {s1, s2, s1_inv, s2_inv}.
struct SidewaysTables {
    OpTable s1, s2, s1_inv, s2_inv;
};
SidewaysTables compute_sideways(const OpTable& b1, const OpTable& b2);

// Kink permutation and birack rank from the sideways tables.
// The kink map is (SΔ)_1 (SΔ)_2^{-1}; the rank is its order, computed as
// the lcm of its cycle lengths. `kink` is returned 1-indexed.
struct KinkData {
    std::vector<int> kink, kink_inv;
    int rank = 1;
};
KinkData compute_kink_and_rank(const OpTable& s1, const OpTable& s2);

// A finite birack presented by operation tables, fully validated on
// construction (axioms (i)-(iii)); immutable afterwards.
class FiniteBirack {
public:
    int size() const { return ops_.n; }
    const CrossingOps& ops() const { return ops_; }

    int b1(int x, int y) const { return ops_.b1(x, y); }
    int b2(int x, int y) const { return ops_.b2(x, y); }
    int b1_inv(int x, int y) const { return ops_.b1i(x, y); }
    int b2_inv(int x, int y) const { return ops_.b2i(x, y); }
    int s1(int x, int y) const { return ops_.s1(x, y); }
    int s2(int x, int y) const { return ops_.s2(x, y); }
    int s1_inv(int x, int y) const { return ops_.s1i(x, y); }
    int s2_inv(int x, int y) const { return ops_.s2i(x, y); }

    int kink(int x) const { return kink_[x - 1]; }
    int kink_inv(int x) const { return kink_inv_[x - 1]; }
    const std::vector<int>& kink_permutation() const { return kink_; }
    // Cycles of the kink map with length > 1, each starting at its least
    // element, sorted by that element.
    std::vector<std::vector<int>> kink_cycles() const;
    int rank() const { return rank_; }

    // Paper-format matrix: n rows of 2n entries, M[i][j] = B1(x_j, x_i),
    // M'[i][j] = B2(x_i, x_j).
    std::vector<std::vector<int>> to_matrix() const;
    bool table_equals(const FiniteBirack& other) const { return ops_.table_equals(other.ops_); }

    // rows: n rows of 2n entries in 1..n (same layout as to_matrix).
    static FiniteBirack from_matrix(const std::vector<std::vector<int>>& rows);
    // b1/b2 given directly as row-major (first argument, second argument).
    static FiniteBirack from_tables(int n, std::vector<int> b1, std::vector<int> b2);
    static FiniteBirack trivial(int n);
    // B(x,y) = (sigma(y), tau(x)); sigma and tau must commute.
    static FiniteBirack constant_action(const std::vector<int>& sigma,
                                        const std::vector<int>& tau);
    // B(x,y) = (sx + ty, rx) on Z_n with x_i = i-1; needs t, r invertible
    // and s^2 = (1 - tr)s mod n.
    static FiniteBirack tsr(int n, long long t, long long s, long long r);
    // B(x,y) = (ty + sx, x); a (t,s)-rack, i.e. the r = 1 case.
    static FiniteBirack ts_rack(int n, long long t, long long s);
    // Cartesian product on pairs, encoded (x,y) -> (x-1)|Y| + y.
    static FiniteBirack product(const FiniteBirack& X, const FiniteBirack& Y);
    // Restriction to a closed subset (1-indexed, ascending); elements are
    // re-indexed by their position in `subset`.
    static FiniteBirack restriction(const FiniteBirack& X, const std::vector<int>& subset);

private:
    FiniteBirack(CrossingOps ops, KinkData kd);

    CrossingOps ops_;
    std::vector<int> kink_, kink_inv_;
    int rank_ = 1;
};

// True iff subset x subset is closed under B, B^{-1}, S, S^{-1} and the
// restriction is itself a birack.
bool is_subbirack(const FiniteBirack& X, const std::vector<int>& subset);

}  // namespace birack
