#pragma once

#include <vector>

#include "birack/cocycle.hpp"
#include "birack/diagram.hpp"
#include "birack/finite_birack.hpp"
#include "birack/hom.hpp"
#include "birack/labeling.hpp"
#include "birack/polynomial.hpp"

namespace birack {

// Phi^B: number of X-labelings of the framed diagram L as given.
long long phi_basic(const LinkDiagram& L, const FiniteBirack& X);

// Phi^Z: sum of Phi^B over the framing tile mod rank(X).
long long phi_integral(const LinkDiagram& L, const FiniteBirack& X);

// Phi^W: sum over the tile of Phi^B(L,w) q^w, a polynomial in q_1..q_c.
InvariantPolynomial phi_writhe(const LinkDiagram& L, const FiniteBirack& X);

struct FramingContribution {
    std::vector<int> framing;
    InvariantPolynomial polynomial;  // in u
    InvariantMultiset multiset;
};

struct Enhancement {
    InvariantMultiset multiset;
    InvariantPolynomial polynomial;  // in u
    std::vector<FramingContribution> by_framing;
};

// Phi_p for a hom p: X -> Y. Framings run over the tile mod rank(X)
// (the source's rank). Each X-labeling of (L,w) is projected along p;
// for every Y-labeling f in the image, sigma(f) = fiber size. The multiset
// collects the sigma(f) and the polynomial is sum of u^sigma(f).
// Y-labelings with empty fiber are not recorded (they appear in neither
// the multiset nor the polynomial), matching the computed values of the
// invariant on the standard examples.
Enhancement phi_hom(const LinkDiagram& L, const BirackHom& p);

// Phi^D for a validated dynamical cocycle: exponents are bead-labeling
// counts |L_S(f)| per X-labeling f over the tile mod rank(base), computed
// by bead propagation; labelings with no bead labeling are dropped.
// Always equals phi_hom along the semidirect projection.
Enhancement phi_cocycle(const LinkDiagram& L, const DynamicalCocycle& D);

}  // namespace birack
