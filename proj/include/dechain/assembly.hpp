#pragma once

#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dechain/linalg.hpp"

namespace dechain {

enum class Exec { serial, parallel };

/// Builds a complex from per-degree generator lists and a boundary function
/// fn(k, key) -> vector<pair<Key, Rational>> landing in degree k-1.
/// Columns are computed independently; the parallel path uses OpenMP.
template <class Key, class Fn>
ChainComplexQ assemble_complex(const std::vector<std::vector<Key>>& basis, Fn&& fn, Exec exec = Exec::parallel) {
  int top = static_cast<int>(basis.size()) - 1;
  std::vector<std::map<Key, int>> index(basis.size());
  for (int k = 0; k <= top; ++k)
    for (int j = 0; j < static_cast<int>(basis[k].size()); ++j) index[k].emplace(basis[k][j], j);

  ChainComplexQ c;
  for (int k = 0; k <= top; ++k) {
    int rows = k > 0 ? static_cast<int>(basis[k - 1].size()) : 0;
    int cols = static_cast<int>(basis[k].size());
    c.dims.push_back(cols);
    c.d.emplace_back(rows, cols);
    if (k == 0) continue;
    std::vector<SparseVec> columns(cols);
    std::exception_ptr error;
    std::mutex error_lock;
    auto column = [&](int j) {
      try {
        SparseVec col;
        for (auto& [key, coef] : fn(k, basis[k][j])) {
          auto it = index[k - 1].find(key);
          if (it == index[k - 1].end())
            throw std::domain_error("assemble_complex: boundary of a generator in degree " + std::to_string(k) +
                                    " leaves the generating set");
          col.emplace_back(it->second, coef);
        }
        columns[j] = std::move(col);
      } catch (...) {
        std::lock_guard<std::mutex> g(error_lock);
        if (!error) error = std::current_exception();
      }
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
      for (int j = 0; j < cols; ++j) column(j);
    } else {
      for (int j = 0; j < cols; ++j) column(j);
    }
    if (error) std::rethrow_exception(error);
    for (int j = 0; j < cols; ++j) c.d[k].set_column(j, std::move(columns[j]));
  }
  return c;
}

/// Inclusion of one generating set into a larger one, degree by degree.
template <class Key>
ChainMapQ inclusion_map(const std::vector<std::vector<Key>>& small, const std::vector<std::vector<Key>>& big) {
  ChainMapQ f;
  for (std::size_t k = 0; k < small.size(); ++k) {
    int rows = k < big.size() ? static_cast<int>(big[k].size()) : 0;
    QMatrix m(rows, static_cast<int>(small[k].size()));
    std::map<Key, int> index;
    for (int j = 0; j < rows; ++j) index.emplace(big[k][j], j);
    for (int j = 0; j < static_cast<int>(small[k].size()); ++j) {
      auto it = index.find(small[k][j]);
      if (it == index.end()) throw std::invalid_argument("inclusion_map: generator missing from the target");
      m.set_column(j, {{it->second, Rational(1)}});
    }
    f.f.push_back(std::move(m));
  }
  return f;
}

/// dim im(H_k(small) -> H_k(big)) for k = 0..top(small).
template <class Key>
std::vector<int> stable_image_dims(const ChainComplexQ& small, const std::vector<std::vector<Key>>& small_basis,
                                   const ChainComplexQ& big, const std::vector<std::vector<Key>>& big_basis) {
  ChainMapQ f = inclusion_map(small_basis, big_basis);
  std::vector<int> out(small.dims.size());
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < static_cast<int>(small.dims.size()); ++k) out[k] = induced_image_dim(small, big, f, k);
  return out;
}

}  // namespace dechain
