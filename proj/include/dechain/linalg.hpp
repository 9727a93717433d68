#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dechain/rational.hpp"

namespace dechain {

/// Sparse vector sorted by index with no stored zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sparse_from_dense(const std::vector<Rational>& v);
void sparse_add_scaled(SparseVec& acc, const SparseVec& v, const Rational& c);

/// Sparse rational matrix stored by columns.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(cols) {}
  static QMatrix from_dense(const std::vector<std::vector<Rational>>& rows);
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const SparseVec& column(int c) const { return columns_[c]; }
  /// Replaces column c; zeros are dropped and entries sorted.
  void set_column(int c, SparseVec v);
  Rational at(int r, int c) const;
  std::vector<std::vector<Rational>> dense() const;

  bool is_zero() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVec> columns_;
};

QMatrix multiply(const QMatrix& a, const QMatrix& b);
QMatrix subtract(const QMatrix& a, const QMatrix& b);

/// Fraction-free column elimination, pivot at the first nonzero row.
int rank(const QMatrix& m);
/// Dense rational elimination with max-magnitude numerator pivots. Used to cross-check rank().
int rank_reference(const QMatrix& m);
std::vector<SparseVec> kernel_basis(const QMatrix& m);
/// Solves m x = b; nullopt if b is not in the column span.
std::optional<SparseVec> solve(const QMatrix& m, const SparseVec& b);

/// Complex C_0 <- C_1 <- ... with d[k] : C_k -> C_{k-1} (d[0] has zero rows).
struct ChainComplexQ {
  std::vector<int> dims;
  std::vector<QMatrix> d;
  std::vector<std::vector<std::string>> labels;

  int top() const { return static_cast<int>(dims.size()) - 1; }
  int dim(int k) const { return k >= 0 && k <= top() ? dims[k] : 0; }
  /// Zero matrices outside the stored range.
  QMatrix boundary(int k) const;
};

/// Throws std::domain_error naming the first degree with d o d != 0 or a shape mismatch.
void check_complex(const ChainComplexQ& c);
std::vector<int> homology_dims(const ChainComplexQ& c);

struct ChainMapQ {
  std::vector<QMatrix> f;
  QMatrix at(int k, int rows, int cols) const;
};

/// First degree where f d != d' f, if any.
std::optional<int> chain_map_defect(const ChainComplexQ& src, const ChainComplexQ& dst, const ChainMapQ& f);
/// dim im(H_k(f)).
int induced_image_dim(const ChainComplexQ& src, const ChainComplexQ& dst, const ChainMapQ& f, int k);
/// Is the vector (in C_k) a boundary?
bool is_boundary(const ChainComplexQ& c, int k, const SparseVec& v);

struct QuasiIsoReport {
  std::vector<int> source_homology;
  std::vector<int> target_homology;
  std::vector<int> image;
  std::vector<bool> iso;
  bool ok = false;
  std::string diagnostic;
};
QuasiIsoReport quasi_iso_check(const ChainComplexQ& src, const ChainComplexQ& dst, const ChainMapQ& f, int kmin,
                               int kmax);

}  // namespace dechain
