#include "dechain/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace dechain {

SparseVec sparse_from_dense(const std::vector<Rational>& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.emplace_back(static_cast<int>(i), v[i]);
  return out;
}

void sparse_add_scaled(SparseVec& acc, const SparseVec& v, const Rational& c) {
  if (sgn(c) == 0 || v.empty()) return;
  SparseVec out;
  out.reserve(acc.size() + v.size());
  std::size_t i = 0, j = 0;
  while (i < acc.size() || j < v.size()) {
    if (j == v.size() || (i < acc.size() && acc[i].first < v[j].first)) {
      out.push_back(std::move(acc[i++]));
    } else if (i == acc.size() || v[j].first < acc[i].first) {
      out.emplace_back(v[j].first, c * v[j].second);
      ++j;
    } else {
      Rational s = acc[i].second + c * v[j].second;
      if (sgn(s) != 0) out.emplace_back(acc[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  acc = std::move(out);
}

QMatrix QMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  QMatrix m(r, c);
  for (int j = 0; j < c; ++j) {
    SparseVec col;
    for (int i = 0; i < r; ++i)
      if (sgn(rows[i][j]) != 0) col.emplace_back(i, rows[i][j]);
    m.columns_[j] = std::move(col);
  }
  return m;
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.columns_[i] = {{i, Rational(1)}};
  return m;
}

void QMatrix::set_column(int c, SparseVec v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [i, x] : v) {
    if (i < 0 || i >= rows_) throw std::out_of_range("QMatrix::set_column: row out of range");
    if (!out.empty() && out.back().first == i) {
      out.back().second += x;
      if (sgn(out.back().second) == 0) out.pop_back();
    } else if (sgn(x) != 0) {
      out.emplace_back(i, std::move(x));
    }
  }
  columns_.at(c) = std::move(out);
}

Rational QMatrix::at(int r, int c) const {
  for (const auto& [i, x] : columns_.at(c))
    if (i == r) return x;
  return 0;
}

std::vector<std::vector<Rational>> QMatrix::dense() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, x] : columns_[j]) out[i][j] = x;
  return out;
}

bool QMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVec& c) { return c.empty(); });
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  QMatrix out(a.rows(), b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    SparseVec acc;
    for (const auto& [k, x] : b.column(j)) sparse_add_scaled(acc, a.column(k), x);
    out.set_column(j, std::move(acc));
  }
  return out;
}

QMatrix subtract(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("subtract: shape mismatch");
  QMatrix out(a.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    SparseVec acc = a.column(j);
    sparse_add_scaled(acc, b.column(j), Rational(-1));
    out.set_column(j, std::move(acc));
  }
  return out;
}

namespace {

using ZVec = std::vector<std::pair<int, mpz_class>>;

ZVec primitive(const SparseVec& v) {
  mpz_class l = 1;
  for (const auto& [i, x] : v) l = lcm(l, mpz_class(x.get_den()));
  ZVec out;
  out.reserve(v.size());
  mpz_class g = 0;
  for (const auto& [i, x] : v) {
    mpz_class n = x.get_num() * (l / x.get_den());
    g = gcd(g, n);
    out.emplace_back(i, std::move(n));
  }
  if (g > 1)
    for (auto& e : out) e.second /= g;
  return out;
}

// b*v - a*p
ZVec combine(const ZVec& v, const mpz_class& b, const ZVec& p, const mpz_class& a) {
  ZVec out;
  out.reserve(v.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < p.size()) {
    if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
      out.emplace_back(v[i].first, b * v[i].second);
      ++i;
    } else if (i == v.size() || p[j].first < v[i].first) {
      out.emplace_back(p[j].first, -a * p[j].second);
      ++j;
    } else {
      mpz_class s = b * v[i].second - a * p[j].second;
      if (s != 0) out.emplace_back(v[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

void divide_content(ZVec& v, ZVec* w) {
  mpz_class g = 0;
  for (const auto& e : v) g = gcd(g, e.second);
  if (w)
    for (const auto& e : *w) g = gcd(g, e.second);
  if (g > 1) {
    for (auto& e : v) e.second /= g;
    if (w)
      for (auto& e : *w) e.second /= g;
  }
}

// Column echelon basis; pivot of a stored vector is its first entry.
class Reducer {
 public:
  explicit Reducer(bool track) : track_(track) {}

  // Returns true if v was independent of the stored vectors.
  bool insert(ZVec v, ZVec combo, ZVec* kernel_out) {
    while (!v.empty()) {
      int r = v.front().first;
      auto it = pivot_.find(r);
      if (it == pivot_.end()) {
        pivot_.emplace(r, static_cast<int>(basis_.size()));
        basis_.push_back(std::move(v));
        combos_.push_back(std::move(combo));
        return true;
      }
      const ZVec& p = basis_[it->second];
      mpz_class a = v.front().second;
      mpz_class b = p.front().second;
      mpz_class g = gcd(a, b);
      a /= g;
      b /= g;
      v = combine(v, b, p, a);
      if (track_) combo = combine(combo, b, combos_[it->second], a);
      divide_content(v, track_ ? &combo : nullptr);
    }
    if (kernel_out) *kernel_out = std::move(combo);
    return false;
  }

  int rank() const { return static_cast<int>(basis_.size()); }

 private:
  bool track_;
  std::unordered_map<int, int> pivot_;
  std::vector<ZVec> basis_;
  std::vector<ZVec> combos_;
};

}  // namespace

int rank(const QMatrix& m) {
  Reducer red(false);
  for (int j = 0; j < m.cols(); ++j)
    if (!m.column(j).empty()) red.insert(primitive(m.column(j)), {}, nullptr);
  return red.rank();
}

int rank_reference(const QMatrix& m) {
  auto a = m.dense();
  int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int best = -1;
    mpz_class best_mag = 0;
    for (int i = r; i < rows; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      mpz_class mag = abs(a[i][c].get_num());
      if (best < 0 || mag > best_mag) {
        best = i;
        best_mag = mag;
      }
    }
    if (best < 0) continue;
    std::swap(a[r], a[best]);
    for (int i = r + 1; i < rows; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (int k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

namespace {

// primitive(v) = scale * v
Rational primitive_scale(const SparseVec& v, const ZVec& pv) {
  if (v.empty()) return 1;
  return Rational(pv.front().second) / v.front().second;
}

}  // namespace

std::vector<SparseVec> kernel_basis(const QMatrix& m) {
  Reducer red(true);
  std::vector<Rational> scale(m.cols());
  std::vector<SparseVec> out;
  for (int j = 0; j < m.cols(); ++j) {
    ZVec pv = primitive(m.column(j));
    scale[j] = primitive_scale(m.column(j), pv);
    ZVec k;
    if (!red.insert(std::move(pv), {{j, mpz_class(1)}}, &k)) {
      SparseVec v;
      for (const auto& [i, x] : k) v.emplace_back(i, Rational(x) * scale[i]);
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::optional<SparseVec> solve(const QMatrix& m, const SparseVec& b) {
  if (b.empty()) return SparseVec{};
  Reducer red(true);
  std::vector<Rational> scale(m.cols() + 1);
  for (int j = 0; j < m.cols(); ++j) {
    ZVec pv = primitive(m.column(j));
    scale[j] = primitive_scale(m.column(j), pv);
    red.insert(std::move(pv), {{j, mpz_class(1)}}, nullptr);
  }
  ZVec pb = primitive(b);
  scale[m.cols()] = primitive_scale(b, pb);
  ZVec k;
  if (red.insert(std::move(pb), {{m.cols(), mpz_class(1)}}, &k)) return std::nullopt;
  // sum_j k_j s_j col_j + k_b s_b b = 0
  Rational last = 0;
  for (const auto& [i, x] : k)
    if (i == m.cols()) last = Rational(x) * scale[i];
  SparseVec x;
  for (const auto& [i, v] : k)
    if (i < m.cols()) x.emplace_back(i, -Rational(v) * scale[i] / last);
  return x;
}

QMatrix ChainComplexQ::boundary(int k) const {
  if (k >= 0 && k <= top()) return d[k];
  return QMatrix(dim(k - 1), dim(k));
}

void check_complex(const ChainComplexQ& c) {
  if (c.d.size() != c.dims.size()) throw std::domain_error("check_complex: boundary count mismatch");
  for (int k = 0; k <= c.top(); ++k) {
    if (c.d[k].cols() != c.dims[k] || c.d[k].rows() != c.dim(k - 1))
      throw std::domain_error("check_complex: shape mismatch in degree " + std::to_string(k));
  }
  for (int k = 1; k <= c.top(); ++k)
    if (!multiply(c.d[k - 1], c.d[k]).is_zero())
      throw std::domain_error("check_complex: boundary squares to nonzero in degree " + std::to_string(k));
}

std::vector<int> homology_dims(const ChainComplexQ& c) {
  check_complex(c);
  int n = c.top() + 1;
  std::vector<int> ranks(n + 1, 0);
#pragma omp parallel for schedule(dynamic)
  for (int k = 1; k < n; ++k) ranks[k] = rank(c.d[k]);
  std::vector<int> h(n);
  for (int k = 0; k < n; ++k) h[k] = c.dims[k] - ranks[k] - ranks[k + 1];
  return h;
}

QMatrix ChainMapQ::at(int k, int rows, int cols) const {
  if (k >= 0 && k < static_cast<int>(f.size())) return f[k];
  return QMatrix(rows, cols);
}

std::optional<int> chain_map_defect(const ChainComplexQ& src, const ChainComplexQ& dst, const ChainMapQ& f) {
  int top = std::max(src.top(), dst.top());
  for (int k = 1; k <= top + 1; ++k) {
    QMatrix fk = f.at(k, dst.dim(k), src.dim(k));
    QMatrix fk1 = f.at(k - 1, dst.dim(k - 1), src.dim(k - 1));
    if (fk.rows() != dst.dim(k) || fk.cols() != src.dim(k)) return k;
    if (!subtract(multiply(dst.boundary(k), fk), multiply(fk1, src.boundary(k))).is_zero()) return k;
  }
  return std::nullopt;
}

int induced_image_dim(const ChainComplexQ& src, const ChainComplexQ& dst, const ChainMapQ& f, int k) {
  // rank [[d_k, 0], [f_k, d'_{k+1}]] - rank d_k - rank d'_{k+1}
  QMatrix dk = src.boundary(k);
  QMatrix fk = f.at(k, dst.dim(k), src.dim(k));
  QMatrix dk1 = dst.boundary(k + 1);
  int top_rows = src.dim(k - 1);
  QMatrix block(top_rows + dst.dim(k), src.dim(k) + dst.dim(k + 1));
  for (int j = 0; j < src.dim(k); ++j) {
    SparseVec col = dk.column(j);
    for (const auto& [i, x] : fk.column(j)) col.emplace_back(top_rows + i, x);
    block.set_column(j, std::move(col));
  }
  for (int j = 0; j < dst.dim(k + 1); ++j) {
    SparseVec col;
    for (const auto& [i, x] : dk1.column(j)) col.emplace_back(top_rows + i, x);
    block.set_column(src.dim(k) + j, std::move(col));
  }
  return rank(block) - rank(dk) - rank(dk1);
}

bool is_boundary(const ChainComplexQ& c, int k, const SparseVec& v) {
  return solve(c.boundary(k + 1), v).has_value();
}

QuasiIsoReport quasi_iso_check(const ChainComplexQ& src, const ChainComplexQ& dst, const ChainMapQ& f, int kmin,
                               int kmax) {
  QuasiIsoReport rep;
  check_complex(src);
  check_complex(dst);
  if (auto bad = chain_map_defect(src, dst, f)) {
    rep.diagnostic = "not a chain map in degree " + std::to_string(*bad);
    return rep;
  }
  auto hs = homology_dims(src);
  auto ht = homology_dims(dst);
  rep.ok = true;
  for (int k = kmin; k <= kmax; ++k) {
    int a = k <= src.top() ? hs[k] : 0;
    int b = k <= dst.top() ? ht[k] : 0;
    int im = induced_image_dim(src, dst, f, k);
    bool iso = (a == b && im == a);
    rep.source_homology.push_back(a);
    rep.target_homology.push_back(b);
    rep.image.push_back(im);
    rep.iso.push_back(iso);
    if (!iso && rep.ok) {
      rep.ok = false;
      rep.diagnostic = "not an isomorphism in degree " + std::to_string(k);
    }
  }
  return rep;
}

}  // namespace dechain
