#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dechain/linalg.hpp"
#include "dechain/rational.hpp"
#include "dechain/simplex_category.hpp"

namespace dechain {

/// Nondegenerate simplex: index within its dimension.
struct SimplexRef {
  int dim = 0;
  int index = 0;
  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
  friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

/// Eilenberg-Zilber normal form surj^*(base) with base nondegenerate.
struct DegSimplex {
  OrdMap surj;
  SimplexRef base;
  int dim() const { return surj.dom(); }
  bool degenerate() const { return surj.dom() != surj.cod(); }
  friend bool operator==(const DegSimplex&, const DegSimplex&) = default;
  friend auto operator<=>(const DegSimplex&, const DegSimplex&) = default;
};

inline DegSimplex nondegenerate(SimplexRef x) { return {OrdMap::identity(x.dim), x}; }

class SSet;

struct ProductInfo {
  std::shared_ptr<const SSet> left;
  std::shared_ptr<const SSet> right;
  /// coords[n][k] = (a, b) for the k-th nondegenerate n-simplex.
  std::vector<std::vector<std::pair<DegSimplex, DegSimplex>>> coords;
  std::map<std::pair<DegSimplex, DegSimplex>, SimplexRef> lookup;
};

/// Finite simplicial set stored by nondegenerate simplices and their faces.
class SSet {
 public:
  SSet() = default;

  /// Faces must be given in EZ form and refer to already registered simplices.
  SimplexRef add_simplex(int dim, std::string id, std::vector<DegSimplex> faces);

  int dim() const { return static_cast<int>(simplices_.size()) - 1; }
  int count(int d) const { return d >= 0 && d <= dim() ? static_cast<int>(simplices_[d].size()) : 0; }
  std::vector<int> counts() const;
  std::vector<SimplexRef> simplices(int d) const;
  std::vector<SimplexRef> all_simplices() const;

  const std::string& id(SimplexRef x) const { return simplices_.at(x.dim).at(x.index).id; }
  std::optional<SimplexRef> find(int d, std::string_view id) const;
  const DegSimplex& face(SimplexRef x, int i) const { return simplices_.at(x.dim).at(x.index).faces.at(i); }

  /// EZ normal form of alpha^*(x) for alpha : [n] -> [dim x].
  DegSimplex apply_map(const OrdMap& alpha, const DegSimplex& x) const;
  DegSimplex apply_map(const OrdMap& alpha, SimplexRef x) const { return apply_map(alpha, nondegenerate(x)); }
  /// d_i x.
  DegSimplex face_of(const DegSimplex& x, int i) const;

  /// Throws std::invalid_argument on dangling references or broken simplicial identities.
  void validate() const;

  const ProductInfo* product_info() const { return product_.get(); }
  void set_product_info(std::shared_ptr<const ProductInfo> info) { product_ = std::move(info); }

 private:
  struct Entry {
    std::string id;
    std::vector<DegSimplex> faces;
  };
  std::vector<std::vector<Entry>> simplices_;
  std::vector<std::unordered_map<std::string, int>> index_;
  std::shared_ptr<const ProductInfo> product_;
};

/// Element of N_k(X).
struct Chain {
  int degree = 0;
  std::map<int, Rational> terms;
  void add(int index, const Rational& c);
  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Simplex of a product in EZ form, from any pair of simplices of the factors.
DegSimplex product_simplex(const SSet& product, const DegSimplex& a, const DegSimplex& b);

std::shared_ptr<const SSet> make_shared_sset(SSet x);

SSet delta(int n);
SSet boundary_delta(int n);
SSet product(const SSet& x, const SSet& y);
/// Collapse the subcomplex given by its nondegenerate simplices to the basepoint "*".
SSet quotient(const SSet& x, const std::vector<SimplexRef>& sub);
SSet skeleton(const SSet& x, int k);
/// Nerve of the poset {0,1}^A, |A| = a.
SSet BA(int a);
std::vector<SimplexRef> dBA_simplices(const SSet& ba, int a);
SSet dBA(int a);
SSet sphere(int a);

/// Vertex labels of a chain in BA: per simplex, per vertex, a bit per element of A.
std::vector<std::vector<int>> ba_chain(const SSet& ba, SimplexRef x, int a);

/// Chain of the boundary d x = sum (-1)^i d_i x with degenerate faces dropped.
Chain chain_boundary(const SSet& x, const Chain& c);
ChainComplexQ normalized_chains(const SSet& x);

}  // namespace dechain
