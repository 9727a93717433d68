#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "dechain/assembly.hpp"
#include "dechain/forms.hpp"
#include "dechain/linalg.hpp"

namespace dechain {

/// Element of Phi_{[n],m}: for each nonempty J in [n] a Theta element on [|J|-1].
class PhiElt {
 public:
  using Components = std::map<Mask, ThetaElt, SubsetLess>;

  PhiElt() = default;
  PhiElt(int n, int degree);
  /// i_J(a).
  static PhiElt inject(int n, Mask J, const ThetaElt& a);

  int n() const { return n_; }
  int degree() const { return deg_; }
  const Components& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  ThetaElt component(Mask J) const;
  int weight() const;

  void add(Mask J, const ThetaElt& a);

  PhiElt& operator+=(const PhiElt& o);
  PhiElt& operator-=(const PhiElt& o);
  PhiElt& operator*=(const Rational& c);
  friend PhiElt operator+(PhiElt a, const PhiElt& b) { return a += b; }
  friend PhiElt operator-(PhiElt a, const PhiElt& b) { return a -= b; }
  friend PhiElt operator*(const Rational& c, PhiElt a) { return a *= c; }
  friend bool operator==(const PhiElt& a, const PhiElt& b) {
    return a.n_ == b.n_ && a.deg_ == b.deg_ && a.comps_ == b.comps_;
  }

  std::string str() const;

 private:
  int n_ = 0;
  int deg_ = 0;
  Components comps_;
};

/// -i_J(df _| a) on each component.
PhiElt delta_prime(const PhiElt& a);
/// -sum_j i_{J\j}(res f . dt_j _| a).
PhiElt delta_dblprime(const PhiElt& a);
PhiElt delta(const PhiElt& a);
/// One component of delta'' : the J\{j} part from a Theta element on J, j a local position.
ThetaElt delta_dblprime_face(const ThetaElt& a, int j);

/// sigma_* along any map sigma : [n] -> [m].
PhiElt push_phi(const std::vector<int>& sigma, int m, const PhiElt& a);
/// <<a, w>> = sum_J int_J <a_J, res_J w>; zero on degree mismatch.
Rational big_pair(const PhiElt& a, const FormElt& w);
/// A form pairing nontrivially with a nonzero a.
FormElt xi_witness(const PhiElt& a);

/// Generator of a truncated local complex: i_J(t^nu w_K).
struct LocalKey {
  Mask J = 0;
  Mask K = 0;
  Monomial nu;
  friend bool operator==(const LocalKey&, const LocalKey&) = default;
  friend auto operator<=>(const LocalKey&, const LocalKey&) = default;
};

/// Canonical monomials in t_1..t_n of total degree at most d, in lexicographic order.
std::vector<Monomial> monomials_upto(int n, int d);
/// Nonempty subsets of [n] in lexicographic order.
std::vector<Mask> nonempty_subsets(int n);

struct LocalTruncation {
  int n = 0;
  int D = 0;
  std::vector<std::vector<LocalKey>> basis;
  ChainComplexQ complex;
  SparseVec coordinates(const PhiElt& a) const;
};

/// Span of generators with |nu| + |K| <= D; closed under delta.
LocalTruncation local_truncated_complex(int n, int D, Exec exec = Exec::parallel);

}  // namespace dechain
