#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dechain/poly.hpp"

namespace dechain {

/// Bit set over small integers; bit i stands for index i.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }
std::vector<int> mask_elements(Mask m);
Mask mask_of(const std::vector<int>& elements);
/// Lexicographic order on sorted element lists.
bool subset_less(Mask a, Mask b);
struct SubsetLess {
  bool operator()(Mask a, Mask b) const { return subset_less(a, b); }
};
/// Sign of the permutation sorting the concatenation (a, b); 0 if they overlap.
int merge_sign(Mask a, Mask b);

/// P_[n] tensor an exterior algebra on n generators (indices 1..n), homogeneous.
/// The tag selects the basis: ds_1..ds_n for forms, w_1..w_n for Theta.
template <class Tag>
class WedgeElt {
 public:
  using Terms = std::map<Mask, Poly, SubsetLess>;

  WedgeElt() = default;
  WedgeElt(int n, int degree) : n_(n), deg_(degree) {}

  static WedgeElt basis(int n, Mask mask) { return term(Poly::constant(n, 1), mask); }
  static WedgeElt term(const Poly& f, Mask mask) {
    WedgeElt a(f.n(), popcount(mask));
    a.add(mask, f);
    return a;
  }
  static WedgeElt scalar(const Poly& f) { return term(f, 0); }

  int n() const { return n_; }
  int degree() const { return deg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Max over terms of polynomial degree plus exterior degree; -1 for zero.
  int weight() const {
    int w = -1;
    for (const auto& [m, f] : terms_) w = std::max(w, f.degree() + popcount(m));
    return w;
  }

  Poly coefficient(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Poly(n_) : it->second;
  }

  void add(Mask m, const Poly& f) {
    if (f.n() != n_) throw std::invalid_argument("WedgeElt: index set mismatch");
    if (popcount(m) != deg_) throw std::invalid_argument("WedgeElt: degree mismatch");
    if ((m & 1u) || (m >> (n_ + 1))) throw std::invalid_argument("WedgeElt: wedge index out of range");
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  WedgeElt& operator+=(const WedgeElt& o) {
    check_same(o);
    for (const auto& [m, f] : o.terms_) add(m, f);
    return *this;
  }
  WedgeElt& operator-=(const WedgeElt& o) {
    check_same(o);
    for (const auto& [m, f] : o.terms_) add(m, -f);
    return *this;
  }
  WedgeElt& operator*=(const Rational& c) {
    if (sgn(c) == 0) terms_.clear();
    for (auto& [m, f] : terms_) f *= c;
    return *this;
  }
  friend WedgeElt operator+(WedgeElt a, const WedgeElt& b) { return a += b; }
  friend WedgeElt operator-(WedgeElt a, const WedgeElt& b) { return a -= b; }
  friend WedgeElt operator-(WedgeElt a) { return a *= Rational(-1); }
  friend WedgeElt operator*(WedgeElt a, const Rational& c) { return a *= c; }
  friend WedgeElt operator*(const Rational& c, WedgeElt a) { return a *= c; }
  friend WedgeElt operator*(const Poly& f, const WedgeElt& a) {
    WedgeElt out(a.n_, a.deg_);
    for (const auto& [m, g] : a.terms_) out.add(m, f * g);
    return out;
  }
  friend bool operator==(const WedgeElt& a, const WedgeElt& b) {
    return a.n_ == b.n_ && a.deg_ == b.deg_ && a.terms_ == b.terms_;
  }

  friend WedgeElt wedge(const WedgeElt& a, const WedgeElt& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("wedge: index set mismatch");
    WedgeElt out(a.n_, a.deg_ + b.deg_);
    for (const auto& [ma, fa] : a.terms_)
      for (const auto& [mb, fb] : b.terms_) {
        int s = merge_sign(ma, mb);
        if (s == 0) continue;
        Poly f = fa * fb;
        if (s < 0) f *= Rational(-1);
        out.add(ma | mb, f);
      }
    return out;
  }

  std::string str() const;

 private:
  void check_same(const WedgeElt& o) const {
    if (o.n_ != n_ || o.deg_ != deg_) throw std::invalid_argument("WedgeElt: shape mismatch");
  }

  int n_ = 0;
  int deg_ = 0;
  Terms terms_;
};

struct FormTag {};
struct ThetaTag {};
/// Element of Omega^d_[n] in the ds-basis.
using FormElt = WedgeElt<FormTag>;
/// Element of Theta_{[n],m} in the w-basis, w_i = e_{i-1} - e_i.
using ThetaElt = WedgeElt<ThetaTag>;

// ---- forms ----

FormElt ds(int n, int k);
/// dt_j = ds_{j+1} - ds_j with ds_0 = ds_{n+1} = 0.
FormElt dt(int n, int j);
FormElt de_rham_d(const FormElt& w);
/// Pullback along any map alpha : [k] -> [n].
FormElt pullback(const FormElt& w, const std::vector<int>& alpha);
inline FormElt pullback(const FormElt& w, const OrdMap& alpha) { return pullback(w, alpha.values()); }
/// Restriction to the sub-simplex on the given sorted vertices.
FormElt restrict_to(const FormElt& w, const std::vector<int>& vertices);

// ---- Theta ----

/// theta_[n] = (-1)^n w_1 ^ ... ^ w_n.
ThetaElt theta_top(int n);
/// e_a - e_b written in the w-basis, as a degree one element with constant coefficients.
ThetaElt e_difference(int n, int a, int b);
/// Interior product by a one-form.
ThetaElt interior(const FormElt& u, const ThetaElt& a);
/// Degree-m pairing <a, w> in P_[n]; zero when degrees differ.
Poly pair_theta_form(const ThetaElt& a, const FormElt& w);
/// sigma_* along a surjective map of index sets [n] -> [m], not necessarily monotone.
ThetaElt pushforward(const ThetaElt& a, const std::vector<int>& sigma, int m);
/// Wedge part only, with the polynomial part left constant.
ThetaElt pushforward_wedge(int n, Mask mask, const std::vector<int>& sigma, int m);
/// sigma.(f w_J) = sigma^*(f) w_{sigma^dagger(J)} for a monotone surjection sigma.
ThetaElt bullet(const OrdMap& sigma, const ThetaElt& a);
/// Left inverse of (delta_j)_*: restrict a Theta element annihilating dt_j to the face missing j.
ThetaElt restrict_face(const ThetaElt& a, int j);

}  // namespace dechain
