#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dechain {

/// Nondecreasing map [n] -> [m] stored by its values.
class OrdMap {
 public:
  OrdMap() = default;
  OrdMap(int codomain, std::vector<int> values);

  static OrdMap identity(int n);
  static OrdMap constant(int n, int m, int value);
  /// delta_i : [n-1] -> [n], skips i.
  static OrdMap coface(int n, int i);
  /// sigma_i : [n+1] -> [n], repeats i.
  static OrdMap codegeneracy(int n, int i);

  int dom() const { return static_cast<int>(values_.size()) - 1; }
  int cod() const { return cod_; }
  int operator()(int i) const { return values_[i]; }
  const std::vector<int>& values() const { return values_; }

  bool is_surjective() const;
  bool is_injective() const;
  bool is_identity() const;
  /// Jump set {i > 0 : a(i) > a(i-1)}.
  std::vector<int> jumps() const;

  std::string str() const;

  friend bool operator==(const OrdMap&, const OrdMap&) = default;
  friend auto operator<=>(const OrdMap&, const OrdMap&) = default;

 private:
  int cod_ = 0;
  std::vector<int> values_{0};
};

/// beta o alpha.
OrdMap compose(const OrdMap& beta, const OrdMap& alpha);

/// Section a^dagger(j) = min{i : a(i) = j} of a surjection.
OrdMap dagger(const OrdMap& alpha);

struct EpiMono {
  OrdMap surj;
  OrdMap inj;
};
/// alpha = inj o surj.
EpiMono epi_mono(const OrdMap& alpha);

/// Subset of [n] containing 0, stored ascending.
class PointedSubset {
 public:
  PointedSubset(int ambient, std::vector<int> elements);
  static PointedSubset full(int n);

  int ambient() const { return ambient_; }
  const std::vector<int>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool contains(int i) const;

  OrdMap pi() const;
  OrdMap sigma() const;
  OrdMap eps() const;

  friend bool operator==(const PointedSubset&, const PointedSubset&) = default;

 private:
  int ambient_;
  std::vector<int> elements_;
};

PointedSubset eps_meet(const PointedSubset& a, const PointedSubset& b);

/// The pointed subset A with alpha = pi_A for a surjection alpha.
PointedSubset subset_of_surjection(const OrdMap& alpha);

/// Jointly injective tuple of surjections [n] -> [n_i].
class Shuffle {
 public:
  Shuffle() = default;
  explicit Shuffle(std::vector<OrdMap> parts);

  int size() const { return parts_.empty() ? 0 : parts_[0].dom(); }
  int arity() const { return static_cast<int>(parts_.size()); }
  const OrdMap& operator[](int i) const { return parts_[i]; }
  const std::vector<OrdMap>& parts() const { return parts_; }
  /// A_i = jump set of the i-th part; these partition [n]'.
  std::vector<std::vector<int>> blocks() const;

  friend bool operator==(const Shuffle&, const Shuffle&) = default;
  friend auto operator<=>(const Shuffle&, const Shuffle&) = default;

 private:
  std::vector<OrdMap> parts_;
};

/// Shuffle with the given blocks A_i partitioning [n]'.
Shuffle shuffle_from_blocks(int n, const std::vector<std::vector<int>>& blocks);

std::vector<Shuffle> enumerate_shuffles(const std::vector<int>& sizes);

/// (zeta, xi) in Sigma(m+n, p), (phi, psi) in Sigma(m, n) -> (phi zeta, psi zeta, xi).
Shuffle operad_L(const Shuffle& sigma, const Shuffle& tau);
/// (zeta, xi) in Sigma(m, n+p), (phi, psi) in Sigma(n, p) -> (zeta, phi xi, psi xi).
Shuffle operad_R(const Shuffle& sigma, const Shuffle& tau);

struct ShufflePair {
  Shuffle outer;
  Shuffle inner;
};
ShufflePair operad_L_inverse(const Shuffle& s);
ShufflePair operad_R_inverse(const Shuffle& s);

std::uint64_t binomial(int n, int k);

}  // namespace dechain
