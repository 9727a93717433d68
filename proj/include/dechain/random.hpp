#pragma once

#include <random>
#include <vector>

#include "dechain/forms.hpp"
#include "dechain/phi_local.hpp"

namespace dechain {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);
Rational random_rational(Rng& rng);
/// Canonical polynomial on [n] with a few terms of degree at most d.
Poly random_poly(Rng& rng, int n, int d, int terms = 3);
Monomial random_monomial(Rng& rng, int n, int d, bool with_t0 = false);
Mask random_wedge_mask(Rng& rng, int n, int k);
ThetaElt random_theta(Rng& rng, int n, int degree, int poly_degree, int terms = 2);
FormElt random_form(Rng& rng, int n, int degree, int poly_degree, int terms = 2);
/// Random element of Phi_{[n],m} of weight at most w.
PhiElt random_phi(Rng& rng, int n, int m, int w, int components = 3);
/// Random map [n] -> [m], surjective if requested.
std::vector<int> random_map(Rng& rng, int n, int m, bool surjective);
OrdMap random_surjection(Rng& rng, int n, int m);

}  // namespace dechain
