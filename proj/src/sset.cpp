#include "dechain/sset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dechain {

SimplexRef SSet::add_simplex(int d, std::string id, std::vector<DegSimplex> faces) {
  if (d < 0) throw std::invalid_argument("add_simplex: negative dimension");
  if (static_cast<int>(faces.size()) != (d == 0 ? 0 : d + 1))
    throw std::invalid_argument("add_simplex: wrong number of faces for " + id);
  for (const auto& f : faces) {
    if (f.dim() != d - 1 || f.base.dim != f.surj.cod() || !f.surj.is_surjective())
      throw std::invalid_argument("add_simplex: malformed face of " + id);
    if (f.base.index < 0 || f.base.index >= count(f.base.dim))
      throw std::invalid_argument("add_simplex: dangling face reference in " + id);
  }
  while (d > dim()) {
    simplices_.emplace_back();
    index_.emplace_back();
  }
  if (index_[d].count(id)) throw std::invalid_argument("add_simplex: duplicate id " + id);
  int idx = static_cast<int>(simplices_[d].size());
  index_[d].emplace(id, idx);
  simplices_[d].push_back({std::move(id), std::move(faces)});
  return {d, idx};
}

std::vector<int> SSet::counts() const {
  std::vector<int> c;
  for (const auto& s : simplices_) c.push_back(static_cast<int>(s.size()));
  return c;
}

std::vector<SimplexRef> SSet::simplices(int d) const {
  std::vector<SimplexRef> out;
  for (int i = 0; i < count(d); ++i) out.push_back({d, i});
  return out;
}

std::vector<SimplexRef> SSet::all_simplices() const {
  std::vector<SimplexRef> out;
  for (int d = 0; d <= dim(); ++d)
    for (int i = 0; i < count(d); ++i) out.push_back({d, i});
  return out;
}

std::optional<SimplexRef> SSet::find(int d, std::string_view id) const {
  if (d < 0 || d > dim()) return std::nullopt;
  auto it = index_[d].find(std::string(id));
  if (it == index_[d].end()) return std::nullopt;
  return SimplexRef{d, it->second};
}

DegSimplex SSet::apply_map(const OrdMap& alpha, const DegSimplex& x) const {
  if (alpha.cod() != x.dim()) throw std::invalid_argument("apply_map: dimension mismatch");
  if (x.base.dim > dim() || x.base.index >= count(x.base.dim)) throw std::invalid_argument("apply_map: dangling simplex");
  OrdMap beta = compose(x.surj, alpha);
  SimplexRef y = x.base;
  while (!beta.is_surjective()) {
    // beta = delta_i o beta' for some i missing from the image.
    std::vector<bool> hit(beta.cod() + 1, false);
    for (int v : beta.values()) hit[v] = true;
    int i = static_cast<int>(std::find(hit.begin(), hit.end(), false) - hit.begin());
    std::vector<int> v = beta.values();
    for (int& t : v)
      if (t > i) --t;
    OrdMap reduced(beta.cod() - 1, std::move(v));
    const DegSimplex& f = face(y, i);
    beta = compose(f.surj, reduced);
    y = f.base;
  }
  return {beta, y};
}

DegSimplex SSet::face_of(const DegSimplex& x, int i) const {
  return apply_map(OrdMap::coface(x.dim(), i), x);
}

void SSet::validate() const {
  for (int d = 0; d <= dim(); ++d) {
    for (int k = 0; k < count(d); ++k) {
      SimplexRef x{d, k};
      for (int j = 0; j <= d && d > 0; ++j) {
        const DegSimplex& f = face(x, j);
        if (f.base.dim >= d || f.base.index >= count(f.base.dim))
          throw std::invalid_argument("validate: dangling face of " + id(x));
      }
      DegSimplex xs = nondegenerate(x);
      for (int j = 1; j <= d && d >= 2; ++j) {
        for (int i = 0; i < j; ++i) {
          DegSimplex lhs = face_of(face_of(xs, j), i);
          DegSimplex rhs = face_of(face_of(xs, i), j - 1);
          if (!(lhs == rhs))
            throw std::invalid_argument("validate: simplicial identity fails at " + id(x) + " (i=" +
                                        std::to_string(i) + ", j=" + std::to_string(j) + ")");
        }
      }
    }
  }
}

void Chain::add(int index, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

std::shared_ptr<const SSet> make_shared_sset(SSet x) { return std::make_shared<const SSet>(std::move(x)); }

namespace {

std::string vertex_label(const std::vector<int>& vs) {
  bool small = std::all_of(vs.begin(), vs.end(), [](int v) { return v < 10; });
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!small && i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s;
}

// Standard simplex up to the given dimension cap.
SSet delta_upto(int n, int cap) {
  SSet x;
  std::map<std::vector<int>, SimplexRef> ref;
  for (int d = 0; d <= cap; ++d) {
    // all (d+1)-subsets of [n] in lexicographic order
    std::vector<int> idx(d + 1);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<DegSimplex> faces;
      for (int i = 0; i <= d && d > 0; ++i) {
        std::vector<int> f = idx;
        f.erase(f.begin() + i);
        faces.push_back(nondegenerate(ref.at(f)));
      }
      ref[idx] = x.add_simplex(d, vertex_label(idx), std::move(faces));
      int i = d;
      while (i >= 0 && idx[i] == n - d + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j <= d; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return x;
}

std::string map_label(const OrdMap& a) {
  std::string s;
  for (int v : a.values()) s += std::to_string(v);
  return s;
}

// Surjections [n] -> [m] as jump sets.
std::vector<OrdMap> surjections(int n, int m) {
  std::vector<OrdMap> out;
  if (m > n) return out;
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    std::vector<int> v(n + 1, 0);
    for (int j : idx)
      for (int t = j; t <= n; ++t) ++v[t];
    out.emplace_back(m, std::move(v));
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// Splits a pair of n-simplices into (collapse gamma, nondegenerate pair).
std::pair<OrdMap, std::pair<DegSimplex, DegSimplex>> split_pair(const DegSimplex& a, const DegSimplex& b) {
  int n = a.dim();
  std::vector<int> g(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    bool flat = a.surj(i) == a.surj(i - 1) && b.surj(i) == b.surj(i - 1);
    g[i] = g[i - 1] + (flat ? 0 : 1);
  }
  OrdMap gamma(g.back(), g);
  OrdMap gd = dagger(gamma);
  DegSimplex a2{compose(a.surj, gd), a.base};
  DegSimplex b2{compose(b.surj, gd), b.base};
  return {gamma, {a2, b2}};
}

}  // namespace

SSet delta(int n) {
  if (n < 0) throw std::invalid_argument("delta: negative dimension");
  return delta_upto(n, n);
}

SSet boundary_delta(int n) {
  if (n < 1) throw std::invalid_argument("boundary_delta: need n >= 1");
  return delta_upto(n, n - 1);
}

DegSimplex product_simplex(const SSet& p, const DegSimplex& a, const DegSimplex& b) {
  const ProductInfo* info = p.product_info();
  if (!info) throw std::invalid_argument("product_simplex: not a product");
  if (a.dim() != b.dim()) throw std::invalid_argument("product_simplex: dimension mismatch");
  auto [gamma, pair] = split_pair(a, b);
  auto it = info->lookup.find(pair);
  if (it == info->lookup.end()) throw std::logic_error("product_simplex: pair not registered");
  return {gamma, it->second};
}

SSet product(const SSet& x, const SSet& y) {
  auto info = std::make_shared<ProductInfo>();
  info->left = std::make_shared<const SSet>(x);
  info->right = std::make_shared<const SSet>(y);
  SSet out;
  int top = std::max(0, x.dim()) + std::max(0, y.dim());
  if (x.dim() < 0 || y.dim() < 0) return out;
  info->coords.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    for (int p = 0; p <= std::min(n, x.dim()); ++p) {
      int q_lo = n - p;
      for (int q = q_lo; q <= std::min(n, y.dim()); ++q) {
        auto sa = surjections(n, p);
        auto sb = surjections(n, q);
        for (const auto& xs : x.simplices(p)) {
          for (const auto& ys : y.simplices(q)) {
            for (const auto& alpha : sa) {
              for (const auto& beta : sb) {
                auto ja = alpha.jumps();
                auto jb = beta.jumps();
                std::set<int> u(ja.begin(), ja.end());
                u.insert(jb.begin(), jb.end());
                if (static_cast<int>(u.size()) != n) continue;
                DegSimplex a{alpha, xs}, b{beta, ys};
                std::vector<DegSimplex> faces;
                if (n > 0) {
                  for (int i = 0; i <= n; ++i) {
                    DegSimplex fa = x.face_of(a, i);
                    DegSimplex fb = y.face_of(b, i);
                    auto [gamma, pair] = split_pair(fa, fb);
                    faces.push_back({gamma, info->lookup.at(pair)});
                  }
                }
                std::string id = "(" + x.id(xs) + (alpha.is_identity() ? "" : "^" + map_label(alpha)) + "," +
                                 y.id(ys) + (beta.is_identity() ? "" : "^" + map_label(beta)) + ")";
                SimplexRef r = out.add_simplex(n, id, std::move(faces));
                info->coords[n].emplace_back(a, b);
                info->lookup.emplace(std::make_pair(a, b), r);
              }
            }
          }
        }
      }
    }
  }
  while (!info->coords.empty() && info->coords.back().empty()) info->coords.pop_back();
  out.set_product_info(std::move(info));
  return out;
}

SSet quotient(const SSet& x, const std::vector<SimplexRef>& sub) {
  if (sub.empty()) throw std::invalid_argument("quotient: the collapsed subcomplex must be nonempty");
  std::set<SimplexRef> in(sub.begin(), sub.end());
  for (const auto& s : sub) {
    if (s.dim > x.dim() || s.index >= x.count(s.dim)) throw std::invalid_argument("quotient: dangling simplex");
    for (int i = 0; i <= s.dim && s.dim > 0; ++i)
      if (!in.count(x.face(s, i).base))
        throw std::invalid_argument("quotient: subcomplex not closed under faces at " + x.id(s));
  }
  SSet out;
  std::map<SimplexRef, SimplexRef> ref;
  SimplexRef star = out.add_simplex(0, "*", {});
  for (int d = 0; d <= x.dim(); ++d) {
    for (const auto& s : x.simplices(d)) {
      if (in.count(s)) continue;
      std::vector<DegSimplex> faces;
      for (int i = 0; i <= d && d > 0; ++i) {
        const DegSimplex& f = x.face(s, i);
        if (in.count(f.base))
          faces.push_back({OrdMap::constant(d - 1, 0, 0), star});
        else
          faces.push_back({f.surj, ref.at(f.base)});
      }
      std::string id = x.id(s) == "*" ? "*'" : x.id(s);
      ref[s] = out.add_simplex(d, id, std::move(faces));
    }
  }
  return out;
}

SSet skeleton(const SSet& x, int k) {
  SSet out;
  for (int d = 0; d <= std::min(k, x.dim()); ++d)
    for (const auto& s : x.simplices(d)) {
      std::vector<DegSimplex> faces;
      for (int i = 0; i <= d && d > 0; ++i) faces.push_back(x.face(s, i));
      out.add_simplex(d, x.id(s), std::move(faces));
    }
  return out;
}

namespace {

std::string bits_label(int mask, int a) {
  if (a == 0) return "e";
  std::string s;
  for (int i = 0; i < a; ++i) s += ((mask >> i) & 1) ? '1' : '0';
  return s;
}

std::string chain_label(const std::vector<int>& chain, int a) {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? "-" : "") + bits_label(chain[i], a);
  return s;
}

}  // namespace

SSet BA(int a) {
  if (a < 0 || a > 8) throw std::invalid_argument("BA: unsupported size");
  SSet out;
  std::map<std::vector<int>, SimplexRef> ref;
  int full = (1 << a) - 1;
  // strictly increasing chains of subsets, by dimension
  std::vector<std::vector<std::vector<int>>> chains(a + 1);
  for (int m = 0; m <= full; ++m) chains[0].push_back({m});
  for (int d = 1; d <= a; ++d)
    for (const auto& c : chains[d - 1])
      for (int m = 0; m <= full; ++m)
        if ((m & c.back()) == c.back() && m != c.back()) {
          auto c2 = c;
          c2.push_back(m);
          chains[d].push_back(c2);
        }
  for (int d = 0; d <= a; ++d) {
    std::sort(chains[d].begin(), chains[d].end());
    for (const auto& c : chains[d]) {
      std::vector<DegSimplex> faces;
      for (int i = 0; i <= d && d > 0; ++i) {
        auto f = c;
        f.erase(f.begin() + i);
        faces.push_back(nondegenerate(ref.at(f)));
      }
      ref[c] = out.add_simplex(d, chain_label(c, a), std::move(faces));
    }
  }
  return out;
}

std::vector<std::vector<int>> ba_chain(const SSet& ba, SimplexRef x, int a) {
  // decode the id back into bit vectors
  const std::string& id = ba.id(x);
  std::vector<std::vector<int>> out;
  if (a == 0) {
    out.assign(x.dim + 1, {});
    return out;
  }
  std::stringstream ss(id);
  std::string part;
  while (std::getline(ss, part, '-')) {
    std::vector<int> v;
    for (char ch : part) v.push_back(ch - '0');
    out.push_back(v);
  }
  return out;
}

std::vector<SimplexRef> dBA_simplices(const SSet& ba, int a) {
  std::vector<SimplexRef> out;
  for (const auto& s : ba.all_simplices()) {
    auto c = ba_chain(ba, s, a);
    for (int k = 0; k < a; ++k) {
      if (c.front()[k] == c.back()[k]) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

SSet dBA(int a) {
  SSet ba = BA(a);
  auto sub = dBA_simplices(ba, a);
  std::set<SimplexRef> keep(sub.begin(), sub.end());
  SSet out;
  std::map<SimplexRef, SimplexRef> ref;
  for (const auto& s : ba.all_simplices()) {
    if (!keep.count(s)) continue;
    std::vector<DegSimplex> faces;
    for (int i = 0; i <= s.dim && s.dim > 0; ++i) faces.push_back(nondegenerate(ref.at(ba.face(s, i).base)));
    ref[s] = out.add_simplex(s.dim, ba.id(s), std::move(faces));
  }
  return out;
}

SSet sphere(int a) {
  if (a == 0) {
    SSet out;
    out.add_simplex(0, "*", {});
    out.add_simplex(0, "e", {});
    return out;
  }
  SSet ba = BA(a);
  return quotient(ba, dBA_simplices(ba, a));
}

Chain chain_boundary(const SSet& x, const Chain& c) {
  Chain out;
  out.degree = c.degree - 1;
  if (c.degree == 0) return out;
  for (const auto& [k, coef] : c.terms) {
    for (int i = 0; i <= c.degree; ++i) {
      const DegSimplex& f = x.face({c.degree, k}, i);
      if (f.degenerate()) continue;
      out.add(f.base.index, (i % 2 == 0) ? coef : Rational(-coef));
    }
  }
  return out;
}

ChainComplexQ normalized_chains(const SSet& x) {
  ChainComplexQ c;
  int top = std::max(0, x.dim());
  for (int k = 0; k <= top; ++k) {
    c.dims.push_back(x.count(k));
    std::vector<std::string> lab;
    for (const auto& s : x.simplices(k)) lab.push_back(x.id(s));
    c.labels.push_back(std::move(lab));
    QMatrix m(x.count(k - 1), x.count(k));
    for (int j = 0; j < x.count(k) && k > 0; ++j) {
      Chain e;
      e.degree = k;
      e.add(j, 1);
      Chain b = chain_boundary(x, e);
      SparseVec col(b.terms.begin(), b.terms.end());
      m.set_column(j, std::move(col));
    }
    c.d.push_back(std::move(m));
  }
  return c;
}

}  // namespace dechain
