#pragma once

#include <vector>

#include "birack/finite_birack.hpp"

namespace birack {

// A birack homomorphism f: source -> target, stored as its image table:
// image[i-1] is the target index of x_i. Satisfies B'(f x, f y) = (f B1(x,y), f B2(x,y)).
struct BirackHom {
    FiniteBirack source;
    FiniteBirack target;
    std::vector<int> image;

    int operator()(int x) const { return image[x - 1]; }
};

// True iff `image` defines a homomorphism X -> Y.
bool check_hom(const std::vector<int>& image, const FiniteBirack& X, const FiniteBirack& Y);

// Validating constructor; throws BadParameters if not a hom.
BirackHom make_hom(const FiniteBirack& X, const FiniteBirack& Y, std::vector<int> image);

BirackHom identity_hom(const FiniteBirack& X);

// g after f, for f: X -> Y and g: Y -> Z.
BirackHom compose(const BirackHom& f, const BirackHom& g);

// All homomorphisms X -> Y in lexicographic order of image tables,
// found by backtracking with pruning on partially determined pairs.
std::vector<BirackHom> enumerate_homs(const FiniteBirack& X, const FiniteBirack& Y);

bool is_isomorphism(const BirackHom& f);

// For X = ts_rack(n, t, s): the map x -> s*x onto the subbirack sX,
// returned as a hom onto the induced subbirack (elements of sX re-indexed
// in increasing residue order).
BirackHom s_multiplication_hom(const FiniteBirack& X, long long s);

}  // namespace birack
