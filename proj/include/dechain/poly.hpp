#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dechain/rational.hpp"
#include "dechain/simplex_category.hpp"

namespace dechain {

constexpr int kMaxVars = 16;

/// Exponent vector over t_0, ..., t_15.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  int degree() const;
  /// nu! = prod nu_i!
  Rational factorial() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial monomial_of(const std::vector<int>& exponents);

/// Polynomial in t_0..t_n, no quotient applied.
using RawPoly = std::map<Monomial, Rational>;

void raw_add_term(RawPoly& p, const Monomial& m, const Rational& c);
RawPoly raw_multiply(const RawPoly& a, const RawPoly& b);
/// int t^nu = nu! / (n + |nu|)!, extended linearly; valid on any representative.
Rational integrate_raw(int n, const RawPoly& p);

/// Element of P_[n] = Q[t_0..t_n]/(1 - sum t_i), stored with t_0 eliminated.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int n);

  static Poly constant(int n, const Rational& c);
  static Poly t(int n, int i);
  /// s_k = sum_{j<k} t_j
  static Poly s(int n, int k);
  static Poly monomial(int n, const Monomial& m, const Rational& c = 1);
  /// Substitutes t_0 = 1 - sum_{i>0} t_i.
  static Poly from_raw(int n, const RawPoly& raw);

  int n() const { return n_; }
  const RawPoly& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for zero.
  int degree() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  Rational integrate() const { return integrate_raw(n_, terms_); }
  /// d/dt_j on the canonical lift (j >= 1).
  Poly partial(int j) const;
  /// sum x_i d/dt_i; requires sum x_i = 0.
  Poly grad(const std::vector<Rational>& x) const;
  /// alpha^*(t_j) = sum_{alpha(i)=j} t_i for any map alpha : [k] -> [n].
  Poly pullback(const std::vector<int>& alpha) const;
  Poly pullback(const OrdMap& alpha) const { return pullback(alpha.values()); }
  /// Fibre integration along a surjection sigma : [n] -> [m].
  Poly pushforward(const std::vector<int>& sigma, int m) const;
  /// Restriction to the face missing j (t_j = 0, relabel).
  Poly restrict_face(int j) const;
  /// Restriction to the sub-simplex on the given sorted vertices.
  Poly restrict_to(const std::vector<int>& vertices) const;

  std::string str() const;

 private:
  int n_ = 0;
  RawPoly terms_;
};

/// Pushforward of a raw polynomial; result normalized.
Poly pushforward_raw(int n, const RawPoly& p, const std::vector<int>& sigma, int m);

}  // namespace dechain
