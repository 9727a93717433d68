#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dechain/monoidal.hpp"

namespace dechain {

/// Nondegenerate simplex of S^A ^ X_+ away from the basepoint. alpha_a : [k] -> [1] jumps at f[a] in
/// [k]' (one entry per label, labels sorted) and x is a k-simplex of X.
struct SmashSimplex {
  std::vector<int> f;
  DegSimplex x;
  int dim() const { return x.dim(); }
  friend bool operator==(const SmashSimplex&, const SmashSimplex&) = default;
  friend auto operator<=>(const SmashSimplex&, const SmashSimplex&) = default;
};

/// nullopt if some alpha_a is constant or the pair (alpha, x) is degenerate.
std::optional<SmashSimplex> smash_normalize(std::vector<int> f, DegSimplex x);
/// All smash simplices of dimension k with m labels.
std::vector<SmashSimplex> smash_simplices(const SSet& X, int m, int k);

/// Element of U_d(A, X): the image v in N_{d+|A|}(S^A ^ X_+) of u_A = a_1 ^ ... ^ a_m, A sorted.
class UElt {
 public:
  using Terms = std::map<SmashSimplex, Rational>;

  UElt() = default;
  UElt(std::vector<int> labels, int degree);

  const std::vector<int>& labels() const { return labels_; }
  int m() const { return static_cast<int>(labels_.size()); }
  int degree() const { return deg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const SmashSimplex& s, const Rational& c);

  UElt& operator+=(const UElt& o);
  UElt& operator-=(const UElt& o);
  UElt& operator*=(const Rational& c);
  friend UElt operator+(UElt a, const UElt& b) { return a += b; }
  friend UElt operator-(UElt a, const UElt& b) { return a -= b; }
  friend UElt operator*(const Rational& c, UElt a) { return a *= c; }
  friend bool operator==(const UElt&, const UElt&) = default;

 private:
  std::vector<int> labels_;
  int deg_ = 0;
  Terms terms_;
};

UElt smash_boundary(const SSet& X, const UElt& u);
/// Chains of S^A ^ X_+ with |A| = m, dimensions 0..kmax.
ChainComplexQ smash_complex(const SSet& X, int m, int kmax);

/// z(alpha) = u_A (x) result; alpha given per label in sorted order, all with the same domain [d].
ThetaElt z_of(const std::vector<OrdMap>& alpha);
/// The comparison map U_*(A, X) -> Phi_*(X).
PhiChain phi_sharp(const SSet& X, const UElt& u);

/// The fundamental cycle of S^A in U_0(A, pt), normalized so that phi_sharp gives pt (x) 1.
UElt eta(const std::vector<int>& labels);
/// U(A, X) (x) U(B, Y) -> U(A u B, X x Y); P = product(X, Y); A and B disjoint.
UElt nu(const SSet& P, const UElt& u, const UElt& v);
/// Transport along a bijection of labels.
UElt relabel(const UElt& u, const std::map<int, int>& g);
/// lambda_* for an injection lambda : A -> B; `target` is B.
UElt lambda_star(const SSet& X, const UElt& u, const std::map<int, int>& lambda, std::vector<int> target);

/// Representative in U(A, X) with phi_sharp = x (x) t^nu w_J / nu!; J is a wedge mask on [n]'.
UElt zeta1(const SSet& X, SimplexRef x, const std::vector<int>& nu, Mask J);

/// Class in the colimit, as a formal sum of representatives.
struct StabClass {
  int degree = 0;
  std::vector<UElt> reps;
};

StabClass zeta(const SSet& X, SimplexRef x, const std::vector<int>& nu, Mask J);
StabClass zeta_prime(const SSet& X, const PhiChain& c);
PhiChain psi(const SSet& X, const StabClass& s);
/// Equality in the colimit, decided through psi.
bool same_class(const SSet& X, const StabClass& a, const StabClass& b);
/// Single representative in U({0..N-1}, X); N defaults to the largest label count.
UElt stabilize(const SSet& X, const StabClass& s, int N = -1);
/// Image in the coinvariants of the label permutations: every term rewritten with its jumps sorted.
UElt coinvariant_form(const UElt& u);
/// Equality in the colimit decided without psi: both sides are pushed into U({0..M-1}, X) for
/// M up to `extra` beyond the largest label count and compared modulo label permutations.
bool equal_in_colimit(const SSet& X, const StabClass& a, const StabClass& b, int extra = 2);

}  // namespace dechain
