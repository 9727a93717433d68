#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dechain/assembly.hpp"
#include "dechain/forms.hpp"
#include "dechain/phi_local.hpp"
#include "dechain/random.hpp"
#include "dechain/sset.hpp"

namespace dechain {

/// Element of Phi_d(X) in split form: sum over nondegenerate x of x (x) alpha_x, alpha_x in Theta_{[dim x], d}.
class PhiChain {
 public:
  using Terms = std::map<SimplexRef, ThetaElt>;

  PhiChain() = default;
  explicit PhiChain(int degree) : deg_(degree) {}

  int degree() const { return deg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ThetaElt term(SimplexRef x) const;

  void add(SimplexRef x, const ThetaElt& a);

  PhiChain& operator+=(const PhiChain& o);
  PhiChain& operator-=(const PhiChain& o);
  PhiChain& operator*=(const Rational& c);
  friend PhiChain operator+(PhiChain a, const PhiChain& b) { return a += b; }
  friend PhiChain operator-(PhiChain a, const PhiChain& b) { return a -= b; }
  friend PhiChain operator*(const Rational& c, PhiChain a) { return a *= c; }
  friend bool operator==(const PhiChain& a, const PhiChain& b) { return a.deg_ == b.deg_ && a.terms_ == b.terms_; }

  std::string str(const SSet& x) const;

 private:
  int deg_ = 0;
  Terms terms_;
};

/// x (x) a for an arbitrary simplex x and a in Phi_{[dim x]}, rewritten in split form.
PhiChain canonicalize_term(const SSet& X, const DegSimplex& x, const PhiElt& a);
PhiChain phi_boundary(const SSet& X, const PhiChain& c);
/// x -> (-1)^n x (x) theta_[n].
PhiChain phi_of_chain(const Chain& c);

/// Generator x (x) t^nu w_K of the split basis.
struct GlobalKey {
  SimplexRef x;
  Monomial nu;
  Mask K = 0;
  friend bool operator==(const GlobalKey&, const GlobalKey&) = default;
  friend bool operator<(const GlobalKey& a, const GlobalKey& b);
};

struct GlobalTruncation {
  int D = 0;
  std::vector<std::vector<GlobalKey>> basis;
  ChainComplexQ complex;

  SparseVec coordinates(const PhiChain& c) const;
  PhiChain element(int degree, const SparseVec& v) const;
};

/// G_D: generators of weight |nu| + |K| <= D. Throws std::domain_error if the boundary leaves G_D.
GlobalTruncation truncated_complex(const SSet& X, int D, Exec exec = Exec::parallel);

/// phi : N_*(X) -> G_D as matrices.
ChainMapQ phi_matrix(const SSet& X, const GlobalTruncation& g);

struct HomologyReport {
  std::string complex;
  int D = 0;
  std::vector<int> dims_GD;
  std::vector<int> homology_N;
  std::vector<int> stable_image_dims;
  std::vector<int> stable_image_dims_next;
  std::vector<int> phi_image_dims;
  bool matches_N = false;
  std::string diagnostic;
};

/// Compares dim im(H(G_D) -> H(G_{D+2})) and the same for D+1 against H(N_*(X)), and checks that
/// the classes of phi span that image.
HomologyReport phi_homology(const SSet& X, const std::string& name, int D, Exec exec = Exec::parallel);

/// Degree-d cochain form: values on nondegenerate simplices.
struct CochainForm {
  int degree = 0;
  std::map<SimplexRef, FormElt> values;

  FormElt value(const SSet& X, SimplexRef x) const;
};

struct CochainViolation {
  SimplexRef simplex;
  int face = 0;
};
/// First (simplex, face) where the face-compatibility condition fails.
std::optional<CochainViolation> validate_cochain(const SSet& X, const CochainForm& w);
/// Value on an arbitrary simplex, via pullback along its degeneracy.
FormElt cochain_value(const SSet& X, const CochainForm& w, const DegSimplex& x);
CochainForm cochain_d(const CochainForm& w);
CochainForm cochain_scale(const CochainForm& w, const Rational& c);
CochainForm cochain_add(const CochainForm& a, const CochainForm& b);
Rational global_pair(const SSet& X, const PhiChain& c, const CochainForm& w);
/// Valuewise product on X x Y; P must be built by product(X, Y).
CochainForm omega_wedge(const SSet& P, const CochainForm& w, const CochainForm& v);

/// Basis of degree-d cochain forms with polynomial degree at most p.
std::vector<CochainForm> cochain_basis(const SSet& X, int d, int p);
CochainForm random_cochain(Rng& rng, const std::vector<CochainForm>& basis, int degree);
/// Random split-form chain of degree d with weight at most w.
PhiChain random_phi_chain(Rng& rng, const SSet& X, int d, int w, int terms = 3);

}  // namespace dechain
