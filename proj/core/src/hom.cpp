#include "birack/hom.hpp"

#include <algorithm>
#include <numeric>

namespace birack {

bool check_hom(const std::vector<int>& image, const FiniteBirack& X, const FiniteBirack& Y) {
    const int n = X.size();
    if (static_cast<int>(image.size()) != n) return false;
    for (int v : image)
        if (v < 1 || v > Y.size()) return false;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            if (Y.b1(image[x - 1], image[y - 1]) != image[X.b1(x, y) - 1]) return false;
            if (Y.b2(image[x - 1], image[y - 1]) != image[X.b2(x, y) - 1]) return false;
        }
    return true;
}

BirackHom make_hom(const FiniteBirack& X, const FiniteBirack& Y, std::vector<int> image) {
    if (!check_hom(image, X, Y)) throw BadParameters("image table is not a homomorphism");
    return BirackHom{X, Y, std::move(image)};
}

BirackHom identity_hom(const FiniteBirack& X) {
    std::vector<int> id(X.size());
    std::iota(id.begin(), id.end(), 1);
    return BirackHom{X, X, std::move(id)};
}

BirackHom compose(const BirackHom& f, const BirackHom& g) {
    if (f.target.size() != g.source.size() || !f.target.table_equals(g.source))
        throw BadParameters("compose: target of f differs from source of g");
    std::vector<int> image(f.image.size());
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = g.image[f.image[i] - 1];
    return BirackHom{f.source, g.target, std::move(image)};
}

std::vector<BirackHom> enumerate_homs(const FiniteBirack& X, const FiniteBirack& Y) {
    const int n = X.size(), m = Y.size();
    std::vector<BirackHom> out;
    std::vector<int> image(n, 0);

    // Check every pair whose arguments and both B-values are already assigned.
    auto consistent_upto = [&](int k) {
        for (int x = 1; x <= k; ++x)
            for (int y = 1; y <= k; ++y) {
                const int v1 = X.b1(x, y), v2 = X.b2(x, y);
                if (v1 <= k && Y.b1(image[x - 1], image[y - 1]) != image[v1 - 1]) return false;
                if (v2 <= k && Y.b2(image[x - 1], image[y - 1]) != image[v2 - 1]) return false;
            }
        return true;
    };

    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            if (check_hom(image, X, Y)) out.push_back(BirackHom{X, Y, image});
            return;
        }
        for (int v = 1; v <= m; ++v) {
            image[k] = v;
            if (consistent_upto(k + 1)) self(self, k + 1);
        }
        image[k] = 0;
    };
    rec(rec, 0);
    return out;
}

bool is_isomorphism(const BirackHom& f) {
    if (f.source.size() != f.target.size()) return false;
    std::vector<char> seen(f.target.size(), 0);
    for (int v : f.image) {
        if (seen[v - 1]) return false;
        seen[v - 1] = 1;
    }
    return true;
}

BirackHom s_multiplication_hom(const FiniteBirack& X, long long s) {
    const int n = X.size();
    const long long sm = ((s % n) + n) % n;
    // image residues s*x for x = 0..n-1 (elements encoded x_i = i-1)
    std::vector<int> residues;
    for (int x = 0; x < n; ++x) residues.push_back(static_cast<int>((sm * x) % n));
    std::vector<int> image_set = residues;
    std::sort(image_set.begin(), image_set.end());
    image_set.erase(std::unique(image_set.begin(), image_set.end()), image_set.end());
    std::vector<int> subset;
    for (int r : image_set) subset.push_back(r + 1);
    FiniteBirack sub = FiniteBirack::restriction(X, subset);
    std::vector<int> pos(n + 1, 0);
    for (std::size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = static_cast<int>(i) + 1;
    std::vector<int> image(n);
    for (int x = 0; x < n; ++x) image[x] = pos[residues[x] + 1];
    if (!check_hom(image, X, sub))
        throw BadParameters("x -> s*x is not a homomorphism on this birack");
    return BirackHom{X, std::move(sub), std::move(image)};
}

}  // namespace birack
