#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "dechain/phi_global.hpp"

namespace dechain {

/// mu_{zeta xi}(f a ⊗ g b) = zeta^*(f) xi^*(g) zeta.(a) ^ xi.(b).
ThetaElt mu_theta(const Shuffle& s, const ThetaElt& a, const ThetaElt& b);
/// zeta^*(w) ^ xi^*(v).
FormElt mu_form(const Shuffle& s, const FormElt& w, const FormElt& v);
/// The unit with mu(theta_[n] ⊗ theta_[m]) = sgn . theta_[n+m].
int shuffle_sign(const Shuffle& s);

/// Shuffle product N_n(X) ⊗ N_m(Y) -> N_{n+m}(X x Y); P = product(X, Y).
Chain shuffle_product_N(const SSet& P, const Chain& x, const Chain& y);
/// mu : Phi(X) ⊗ Phi(Y) -> Phi(X x Y); P = product(X, Y).
PhiChain mu_phi(const SSet& P, const PhiChain& a, const PhiChain& b);

/// Coordinates of a simplex of an iterated product, one per leaf factor (left to right).
std::vector<DegSimplex> leaf_coordinates(const SSet& P, const DegSimplex& s);

/// Phi chain of an iterated product keyed by leaf coordinates, for comparisons across bracketings.
using LeafChain = std::map<std::vector<DegSimplex>, ThetaElt>;
LeafChain leaf_chain(const SSet& P, const PhiChain& c);

/// Swap X x Y -> Y x X on split-form chains; Q = product(Y, X).
PhiChain swap_factors(const SSet& P, const SSet& Q, const PhiChain& c);

}  // namespace dechain
