#include "dechain/simplex_category.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dechain {

OrdMap::OrdMap(int codomain, std::vector<int> values) : cod_(codomain), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("OrdMap: empty domain");
  if (cod_ < 0) throw std::invalid_argument("OrdMap: negative codomain");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || values_[i] > cod_) throw std::invalid_argument("OrdMap: value out of range");
    if (i > 0 && values_[i] < values_[i - 1]) throw std::invalid_argument("OrdMap: not nondecreasing");
  }
}

OrdMap OrdMap::identity(int n) {
  std::vector<int> v(n + 1);
  std::iota(v.begin(), v.end(), 0);
  return OrdMap(n, std::move(v));
}

OrdMap OrdMap::constant(int n, int m, int value) { return OrdMap(m, std::vector<int>(n + 1, value)); }

OrdMap OrdMap::coface(int n, int i) {
  if (i < 0 || i > n || n < 1) throw std::invalid_argument("coface: index out of range");
  std::vector<int> v;
  for (int k = 0; k <= n; ++k)
    if (k != i) v.push_back(k);
  return OrdMap(n, std::move(v));
}

OrdMap OrdMap::codegeneracy(int n, int i) {
  if (i < 0 || i > n) throw std::invalid_argument("codegeneracy: index out of range");
  std::vector<int> v;
  for (int k = 0; k <= n + 1; ++k) v.push_back(k <= i ? k : k - 1);
  return OrdMap(n, std::move(v));
}

bool OrdMap::is_surjective() const {
  if (values_.front() != 0 || values_.back() != cod_) return false;
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] - values_[i - 1] > 1) return false;
  return true;
}

bool OrdMap::is_injective() const {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] == values_[i - 1]) return false;
  return true;
}

bool OrdMap::is_identity() const { return dom() == cod_ && is_injective(); }

std::vector<int> OrdMap::jumps() const {
  std::vector<int> out;
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] > values_[i - 1]) out.push_back(static_cast<int>(i));
  return out;
}

std::string OrdMap::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
  os << "):[" << dom() << "]->[" << cod_ << "]";
  return os.str();
}

OrdMap compose(const OrdMap& beta, const OrdMap& alpha) {
  if (alpha.cod() != beta.dom()) throw std::invalid_argument("compose: domain mismatch");
  std::vector<int> v(alpha.dom() + 1);
  for (int i = 0; i <= alpha.dom(); ++i) v[i] = beta(alpha(i));
  return OrdMap(beta.cod(), std::move(v));
}

OrdMap dagger(const OrdMap& alpha) {
  if (!alpha.is_surjective()) throw std::invalid_argument("dagger: map is not surjective");
  std::vector<int> v(alpha.cod() + 1, -1);
  for (int i = alpha.dom(); i >= 0; --i) v[alpha(i)] = i;
  return OrdMap(alpha.dom(), std::move(v));
}

EpiMono epi_mono(const OrdMap& alpha) {
  std::vector<int> image;
  std::vector<int> s(alpha.dom() + 1);
  for (int i = 0; i <= alpha.dom(); ++i) {
    if (image.empty() || image.back() != alpha(i)) image.push_back(alpha(i));
    s[i] = static_cast<int>(image.size()) - 1;
  }
  int k = static_cast<int>(image.size()) - 1;
  return {OrdMap(k, std::move(s)), OrdMap(alpha.cod(), std::move(image))};
}

PointedSubset::PointedSubset(int ambient, std::vector<int> elements)
    : ambient_(ambient), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty() || elements_.front() != 0) throw std::invalid_argument("PointedSubset: 0 missing");
  if (elements_.back() > ambient_) throw std::invalid_argument("PointedSubset: element out of range");
}

PointedSubset PointedSubset::full(int n) {
  std::vector<int> v(n + 1);
  std::iota(v.begin(), v.end(), 0);
  return PointedSubset(n, std::move(v));
}

bool PointedSubset::contains(int i) const { return std::binary_search(elements_.begin(), elements_.end(), i); }

OrdMap PointedSubset::sigma() const { return OrdMap(ambient_, elements_); }

OrdMap PointedSubset::pi() const {
  std::vector<int> v(ambient_ + 1);
  int j = 0;
  for (int i = 0; i <= ambient_; ++i) {
    while (j + 1 < size() && elements_[j + 1] <= i) ++j;
    v[i] = j;
  }
  return OrdMap(size() - 1, std::move(v));
}

OrdMap PointedSubset::eps() const { return compose(sigma(), pi()); }

PointedSubset eps_meet(const PointedSubset& a, const PointedSubset& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("eps_meet: ambient mismatch");
  std::vector<int> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                        std::back_inserter(out));
  return PointedSubset(a.ambient(), std::move(out));
}

PointedSubset subset_of_surjection(const OrdMap& alpha) {
  if (!alpha.is_surjective()) throw std::invalid_argument("subset_of_surjection: not surjective");
  std::vector<int> v{0};
  for (int j : alpha.jumps()) v.push_back(j);
  return PointedSubset(alpha.dom(), std::move(v));
}

Shuffle::Shuffle(std::vector<OrdMap> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Shuffle: no parts");
  int n = parts_[0].dom();
  int total = 0;
  for (const auto& p : parts_) {
    if (p.dom() != n) throw std::invalid_argument("Shuffle: parts have different domains");
    if (!p.is_surjective()) throw std::invalid_argument("Shuffle: part not surjective");
    total += p.cod();
  }
  if (total != n) throw std::invalid_argument("Shuffle: sizes do not add up");
  for (int i = 1; i <= n; ++i) {
    bool moved = false;
    for (const auto& p : parts_) moved = moved || p(i) != p(i - 1);
    if (!moved) throw std::invalid_argument("Shuffle: not jointly injective");
  }
}

std::vector<std::vector<int>> Shuffle::blocks() const {
  std::vector<std::vector<int>> out;
  for (const auto& p : parts_) out.push_back(p.jumps());
  return out;
}

Shuffle shuffle_from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<OrdMap> parts;
  for (const auto& b : blocks) {
    std::vector<int> el{0};
    el.insert(el.end(), b.begin(), b.end());
    parts.push_back(PointedSubset(n, el).pi());
  }
  return Shuffle(std::move(parts));
}

std::vector<Shuffle> enumerate_shuffles(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("enumerate_shuffles: no parts");
  for (int s : sizes)
    if (s < 0) throw std::invalid_argument("enumerate_shuffles: negative size");
  int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<Shuffle> out;
  std::vector<std::vector<int>> blocks(sizes.size());

  // Lexicographic on A_1 as a sorted list, then recursively on the rest.
  std::function<void(std::size_t, std::vector<int>)> rec = [&](std::size_t part, std::vector<int> remaining) {
    if (part + 1 == sizes.size()) {
      blocks[part] = remaining;
      out.push_back(shuffle_from_blocks(n, blocks));
      return;
    }
    int k = sizes[part];
    int r = static_cast<int>(remaining.size());
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<int> chosen, rest;
      std::size_t c = 0;
      for (int t = 0; t < r; ++t) {
        if (c < idx.size() && idx[c] == t) {
          chosen.push_back(remaining[t]);
          ++c;
        } else {
          rest.push_back(remaining[t]);
        }
      }
      blocks[part] = chosen;
      rec(part + 1, rest);
      int i = k - 1;
      while (i >= 0 && idx[i] == r - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  };
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  rec(0, all);
  return out;
}

Shuffle operad_L(const Shuffle& sigma, const Shuffle& tau) {
  if (sigma.arity() != 2 || tau.arity() != 2 || sigma[0].cod() != tau.size())
    throw std::invalid_argument("operad_L: size mismatch");
  return Shuffle({compose(tau[0], sigma[0]), compose(tau[1], sigma[0]), sigma[1]});
}

Shuffle operad_R(const Shuffle& sigma, const Shuffle& tau) {
  if (sigma.arity() != 2 || tau.arity() != 2 || sigma[1].cod() != tau.size())
    throw std::invalid_argument("operad_R: size mismatch");
  return Shuffle({sigma[0], compose(tau[0], sigma[1]), compose(tau[1], sigma[1])});
}

namespace {

std::vector<int> image_of(const OrdMap& f, const std::vector<int>& xs) {
  std::vector<int> out;
  for (int x : xs) out.push_back(f(x));
  return out;
}

std::vector<int> merged(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

ShufflePair operad_L_inverse(const Shuffle& s) {
  if (s.arity() != 3) throw std::invalid_argument("operad_L_inverse: need three parts");
  auto b = s.blocks();
  int n = s.size();
  auto u = merged(b[0], b[1]);
  Shuffle outer = shuffle_from_blocks(n, {u, b[2]});
  Shuffle inner = shuffle_from_blocks(static_cast<int>(u.size()), {image_of(outer[0], b[0]), image_of(outer[0], b[1])});
  return {outer, inner};
}

ShufflePair operad_R_inverse(const Shuffle& s) {
  if (s.arity() != 3) throw std::invalid_argument("operad_R_inverse: need three parts");
  auto b = s.blocks();
  int n = s.size();
  auto v = merged(b[1], b[2]);
  Shuffle outer = shuffle_from_blocks(n, {b[0], v});
  Shuffle inner = shuffle_from_blocks(static_cast<int>(v.size()), {image_of(outer[1], b[1]), image_of(outer[1], b[2])});
  return {outer, inner};
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace dechain
