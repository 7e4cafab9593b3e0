#include "birack/finite_birack.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace birack {

OpTable::OpTable(int n, std::vector<int> data) : n_(n), data_(std::move(data)) {
    if (static_cast<int>(data_.size()) != n * n)
        throw MalformedMatrix("operation table has wrong size");
}

namespace {

long long mod_pos(long long v, long long n) { return ((v % n) + n) % n; }

bool invertible_mod(long long v, long long n) { return std::gcd(mod_pos(v, n), n) == 1; }

std::vector<int> invert_perm(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

bool is_permutation(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[v - 1]) return false;
        seen[v - 1] = 1;
    }
    return true;
}

}  // namespace

SidewaysTables compute_sideways(const OpTable& b1, const OpTable& b2) {
    const int n = b1.n();
    // G(x,y) = (B1(x,y), x), H(x,y) = (B2(x,y), y); S = H ∘ G^{-1}.
    std::vector<int> ginv(n * n, 0);  // pair index -> encoded (x,y) + 1
    std::vector<char> hseen(n * n, 0);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            const int g = (b1(x, y) - 1) * n + (x - 1);
            if (ginv[g]) {
                int enc = ginv[g] - 1;
                throw SidewaysUndefined(enc / n + 1, enc % n + 1);
            }
            ginv[g] = (x - 1) * n + (y - 1) + 1;
            const int h = (b2(x, y) - 1) * n + (y - 1);
            if (hseen[h]) throw SidewaysNotInvertible();
            hseen[h] = 1;
        }
    for (int i = 0; i < n * n; ++i)
        if (!ginv[i]) throw SidewaysUndefined(i / n + 1, i % n + 1);

    std::vector<int> s1d(n * n), s2d(n * n), s1id(n * n), s2id(n * n);
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) {
            const int enc = ginv[(u - 1) * n + (v - 1)] - 1;
            const int x = enc / n + 1, y = enc % n + 1;
            const int p = b2(x, y), q = y;
            s1d[(u - 1) * n + (v - 1)] = p;
            s2d[(u - 1) * n + (v - 1)] = q;
            s1id[(p - 1) * n + (q - 1)] = u;
            s2id[(p - 1) * n + (q - 1)] = v;
        }
    return {OpTable(n, std::move(s1d)), OpTable(n, std::move(s2d)), OpTable(n, std::move(s1id)),
            OpTable(n, std::move(s2id))};
}

KinkData compute_kink_and_rank(const OpTable& s1, const OpTable& s2) {
    const int n = s1.n();
    std::vector<int> sd1(n), sd2(n);
    for (int x = 1; x <= n; ++x) {
        sd1[x - 1] = s1(x, x);
        sd2[x - 1] = s2(x, x);
    }
    if (!is_permutation(sd2)) {
        for (int x = 1; x <= n; ++x)
            for (int y = x + 1; y <= n; ++y)
                if (sd2[x - 1] == sd2[y - 1])
                    throw AxiomViolation("ii", {x, y}, "(SΔ)_2 is not a bijection");
    }
    if (!is_permutation(sd1)) {
        for (int x = 1; x <= n; ++x)
            for (int y = x + 1; y <= n; ++y)
                if (sd1[x - 1] == sd1[y - 1])
                    throw AxiomViolation("ii", {x, y}, "(SΔ)_1 is not a bijection");
    }
    const std::vector<int> sd2_inv = invert_perm(sd2);
    KinkData kd;
    kd.kink.resize(n);
    for (int x = 1; x <= n; ++x) kd.kink[x - 1] = sd1[sd2_inv[x - 1] - 1];
    kd.kink_inv = invert_perm(kd.kink);
    // rank = lcm of cycle lengths
    std::vector<char> seen(n, 0);
    long long rank = 1;
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        long long len = 0;
        int c = x;
        while (!seen[c]) {
            seen[c] = 1;
            c = kd.kink[c] - 1;
            ++len;
        }
        rank = std::lcm(rank, len);
    }
    kd.rank = static_cast<int>(rank);
    return kd;
}

CrossingOps derive_crossing_ops(int n, OpTable b1, OpTable b2) {
    CrossingOps ops;
    ops.n = n;
    // B must be a bijection on pairs.
    std::vector<int> seen(n * n, 0);
    std::vector<int> b1id(n * n), b2id(n * n);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            const int v1 = b1(x, y), v2 = b2(x, y);
            if (v1 < 1 || v1 > n || v2 < 1 || v2 > n)
                throw MalformedMatrix("table entry out of range");
            const int p = (v1 - 1) * n + (v2 - 1);
            if (seen[p]) {
                const int enc = seen[p] - 1;
                throw AxiomViolation("invertibility", {enc / n + 1, enc % n + 1, x, y},
                                     "B maps two pairs to the same pair");
            }
            seen[p] = (x - 1) * n + (y - 1) + 1;
            b1id[p] = x;
            b2id[p] = y;
        }
    ops.b1i = OpTable(n, std::move(b1id));
    ops.b2i = OpTable(n, std::move(b2id));

    SidewaysTables st;
    try {
        st = compute_sideways(b1, b2);
    } catch (const SidewaysUndefined& e) {
        throw AxiomViolation("i", {e.witness().first, e.witness().second},
                             "no well-defined sideways map");
    } catch (const SidewaysNotInvertible&) {
        throw AxiomViolation("i", {}, "sideways map not invertible");
    }
    ops.s1 = std::move(st.s1);
    ops.s2 = std::move(st.s2);
    ops.s1i = std::move(st.s1_inv);
    ops.s2i = std::move(st.s2_inv);

    ops.sd1.resize(n);
    ops.sd2.resize(n);
    ops.sdi1.resize(n);
    ops.sdi2.resize(n);
    for (int x = 1; x <= n; ++x) {
        ops.sd1[x - 1] = ops.s1(x, x);
        ops.sd2[x - 1] = ops.s2(x, x);
        ops.sdi1[x - 1] = ops.s1i(x, x);
        ops.sdi2[x - 1] = ops.s2i(x, x);
    }
    for (const auto* d : {&ops.sd1, &ops.sd2, &ops.sdi1, &ops.sdi2})
        if (!is_permutation(*d)) {
            for (int x = 1; x <= n; ++x)
                for (int y = x + 1; y <= n; ++y)
                    if ((*d)[x - 1] == (*d)[y - 1])
                        throw AxiomViolation("ii", {x, y}, "diagonal composition not bijective");
        }
    ops.sd1_inv = invert_perm(ops.sd1);
    ops.sd2_inv = invert_perm(ops.sd2);
    ops.sdi1_inv = invert_perm(ops.sdi1);
    ops.sdi2_inv = invert_perm(ops.sdi2);

    ops.b1 = std::move(b1);
    ops.b2 = std::move(b2);
    return ops;
}

namespace {

void check_yang_baxter(const CrossingOps& ops) {
    const int n = ops.n;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            const int a = ops.b1(x, y), b = ops.b2(x, y);
            for (int z = 1; z <= n; ++z) {
                // (B x I)(I x B)(B x I)(x,y,z)
                const int c = ops.b1(b, z), d = ops.b2(b, z);
                const int e = ops.b1(a, c), f = ops.b2(a, c);
                // (I x B)(B x I)(I x B)(x,y,z)
                const int g = ops.b1(y, z), h = ops.b2(y, z);
                const int i = ops.b1(x, g), j = ops.b2(x, g);
                const int k = ops.b1(j, h), l = ops.b2(j, h);
                if (e != i || f != k || d != l)
                    throw AxiomViolation("iii", {x, y, z}, "Yang-Baxter equation fails");
            }
        }
}

}  // namespace

FiniteBirack::FiniteBirack(CrossingOps ops, KinkData kd)
    : ops_(std::move(ops)),
      kink_(std::move(kd.kink)),
      kink_inv_(std::move(kd.kink_inv)),
      rank_(kd.rank) {}

FiniteBirack FiniteBirack::from_tables(int n, std::vector<int> b1, std::vector<int> b2) {
    if (n < 1) throw MalformedMatrix("carrier size must be positive");
    CrossingOps ops = derive_crossing_ops(n, OpTable(n, std::move(b1)), OpTable(n, std::move(b2)));
    check_yang_baxter(ops);
    KinkData kd = compute_kink_and_rank(ops.s1, ops.s2);
    return FiniteBirack(std::move(ops), std::move(kd));
}

FiniteBirack FiniteBirack::from_matrix(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 1) throw MalformedMatrix("empty matrix");
    std::vector<int> b1(n * n), b2(n * n);
    for (int i = 1; i <= n; ++i) {
        if (static_cast<int>(rows[i - 1].size()) != 2 * n)
            throw MalformedMatrix("row " + std::to_string(i) + " does not have 2n entries");
        for (int j = 1; j <= n; ++j) {
            const int k = rows[i - 1][j - 1];
            const int l = rows[i - 1][n + j - 1];
            if (k < 1 || k > n || l < 1 || l > n)
                throw MalformedMatrix("entry out of range in row " + std::to_string(i));
            // M_{i,j} = k with x_k = B1(x_j, x_i); M'_{i,j} = l with x_l = B2(x_i, x_j).
            b1[(j - 1) * n + (i - 1)] = k;
            b2[(i - 1) * n + (j - 1)] = l;
        }
    }
    return from_tables(n, std::move(b1), std::move(b2));
}

std::vector<std::vector<int>> FiniteBirack::to_matrix() const {
    const int n = size();
    std::vector<std::vector<int>> rows(n, std::vector<int>(2 * n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            rows[i - 1][j - 1] = b1(j, i);
            rows[i - 1][n + j - 1] = b2(i, j);
        }
    return rows;
}

std::vector<std::vector<int>> FiniteBirack::kink_cycles() const {
    const int n = size();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> cycles;
    for (int x = 1; x <= n; ++x) {
        if (seen[x - 1]) continue;
        std::vector<int> cyc;
        int c = x;
        while (!seen[c - 1]) {
            seen[c - 1] = 1;
            cyc.push_back(c);
            c = kink(c);
        }
        if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    }
    return cycles;
}

FiniteBirack FiniteBirack::trivial(int n) {
    if (n < 1) throw BadParameters("trivial birack needs n >= 1");
    std::vector<int> b1(n * n), b2(n * n);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            b1[(x - 1) * n + (y - 1)] = y;
            b2[(x - 1) * n + (y - 1)] = x;
        }
    return from_tables(n, std::move(b1), std::move(b2));
}

FiniteBirack FiniteBirack::constant_action(const std::vector<int>& sigma,
                                           const std::vector<int>& tau) {
    const int n = static_cast<int>(sigma.size());
    if (n < 1 || static_cast<int>(tau.size()) != n)
        throw BadParameters("sigma and tau must be permutations of the same set");
    if (!is_permutation(sigma) || !is_permutation(tau))
        throw BadParameters("sigma and tau must be permutations");
    for (int x = 1; x <= n; ++x)
        if (sigma[tau[x - 1] - 1] != tau[sigma[x - 1] - 1]) throw NonCommuting();
    std::vector<int> b1(n * n), b2(n * n);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            b1[(x - 1) * n + (y - 1)] = sigma[y - 1];
            b2[(x - 1) * n + (y - 1)] = tau[x - 1];
        }
    return from_tables(n, std::move(b1), std::move(b2));
}

FiniteBirack FiniteBirack::tsr(int n, long long t, long long s, long long r) {
    if (n < 1) throw BadParameters("modulus must be positive");
    if (!invertible_mod(t, n)) throw BadParameters("t is not invertible mod n");
    if (!invertible_mod(r, n)) throw BadParameters("r is not invertible mod n");
    if (mod_pos(s * s, n) != mod_pos((1 - t * r) * s, n))
        throw BadParameters("s^2 = (1 - tr)s fails mod n");
    std::vector<int> b1(n * n), b2(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            b1[x * n + y] = static_cast<int>(mod_pos(s * x + t * y, n)) + 1;
            b2[x * n + y] = static_cast<int>(mod_pos(r * x, n)) + 1;
        }
    return from_tables(n, std::move(b1), std::move(b2));
}

FiniteBirack FiniteBirack::ts_rack(int n, long long t, long long s) {
    if (n < 1) throw BadParameters("modulus must be positive");
    if (!invertible_mod(t, n)) throw BadParameters("t is not invertible mod n");
    if (mod_pos(s * s, n) != mod_pos((1 - t) * s, n))
        throw BadParameters("s^2 = (1 - t)s fails mod n");
    return tsr(n, t, s, 1);
}

FiniteBirack FiniteBirack::product(const FiniteBirack& X, const FiniteBirack& Y) {
    const int nx = X.size(), ny = Y.size(), n = nx * ny;
    auto enc = [ny](int x, int a) { return (x - 1) * ny + a; };
    std::vector<int> b1(n * n), b2(n * n);
    for (int x = 1; x <= nx; ++x)
        for (int a = 1; a <= ny; ++a)
            for (int y = 1; y <= nx; ++y)
                for (int b = 1; b <= ny; ++b) {
                    const int p = enc(x, a), q = enc(y, b);
                    b1[(p - 1) * n + (q - 1)] = enc(X.b1(x, y), Y.b1(a, b));
                    b2[(p - 1) * n + (q - 1)] = enc(X.b2(x, y), Y.b2(a, b));
                }
    return from_tables(n, std::move(b1), std::move(b2));
}

FiniteBirack FiniteBirack::restriction(const FiniteBirack& X, const std::vector<int>& subset) {
    if (subset.empty()) throw BadParameters("subset must be nonempty");
    std::vector<int> idx(X.size() + 1, 0);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        const int v = subset[i];
        if (v < 1 || v > X.size() || idx[v])
            throw BadParameters("subset must be a set of elements of X");
        idx[v] = static_cast<int>(i) + 1;
    }
    const int m = static_cast<int>(subset.size());
    std::vector<int> b1(m * m), b2(m * m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            const int v1 = X.b1(subset[i - 1], subset[j - 1]);
            const int v2 = X.b2(subset[i - 1], subset[j - 1]);
            if (!idx[v1] || !idx[v2]) throw BadParameters("subset is not closed under B");
            b1[(i - 1) * m + (j - 1)] = idx[v1];
            b2[(i - 1) * m + (j - 1)] = idx[v2];
        }
    return from_tables(m, std::move(b1), std::move(b2));
}

bool is_subbirack(const FiniteBirack& X, const std::vector<int>& subset) {
    std::vector<int> sorted = subset;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) return false;
    try {
        FiniteBirack R = FiniteBirack::restriction(X, sorted);
        (void)R;
    } catch (const Error&) {
        return false;
    }
    // closure under B is checked by restriction(); closure under B^{-1}, S,
    // S^{-1} follows for a finite set once the restriction is a birack, but
    // check explicitly to honor the contract.
    std::vector<char> in(X.size() + 1, 0);
    for (int v : sorted) in[v] = 1;
    for (int a : sorted)
        for (int b : sorted) {
            if (!in[X.b1_inv(a, b)] || !in[X.b2_inv(a, b)]) return false;
            if (!in[X.s1(a, b)] || !in[X.s2(a, b)]) return false;
            if (!in[X.s1_inv(a, b)] || !in[X.s2_inv(a, b)]) return false;
        }
    return true;
}

}  // namespace birack
