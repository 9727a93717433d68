#include "dechain/colimit.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dechain {

namespace {

int perm_sign(const std::vector<int>& v) {
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

int parity(int n) { return n % 2 ? -1 : 1; }

// Jump position of alpha_a o delta_i; 0 or k means alpha_a o delta_i is constant.
int face_jump(int f, int i) { return f <= i ? f : f - 1; }

// phi anticommutes with the boundaries, so the adjoint carries (-1)^{(m+1)d} to become a chain map.
int sharp_sign(int m, int d) { return parity((m + 1) * d); }

Mask full_mask(int k) { return (Mask{1} << (k + 1)) - 1; }

// Surjection [k] -> [n] with the given jumps.
OrdMap surjection_from_jumps(int k, Mask jumps) {
  std::vector<int> v(k + 1, 0);
  for (int i = 1; i <= k; ++i) v[i] = v[i - 1] + ((jumps >> i) & 1);
  int n = v.back();
  return OrdMap(n, std::move(v));
}

// The theta part of z(alpha) given jump positions, before pushing forward.
std::optional<std::pair<int, Mask>> z_sign_and_wedge(const std::vector<int>& f, int k) {
  Mask used = 0;
  for (int v : f) {
    if (v < 1 || v > k || (used >> v) & 1) return std::nullopt;
    used |= Mask{1} << v;
  }
  std::vector<int> seq = f;
  Mask J = 0;
  for (int j = 1; j <= k; ++j)
    if (!((used >> j) & 1)) {
      seq.push_back(j);
      J |= Mask{1} << j;
    }
  return std::make_pair(parity(k) * perm_sign(seq), J);
}

DegSimplex project_left(const SSet& P, const DegSimplex& s) {
  const ProductInfo* info = P.product_info();
  return info->left->apply_map(s.surj, info->coords[s.base.dim][s.base.index].first);
}

}  // namespace

std::optional<SmashSimplex> smash_normalize(std::vector<int> f, DegSimplex x) {
  int k = x.dim();
  Mask cover = 0;
  for (int v : f) {
    if (v < 1 || v > k) return std::nullopt;
    cover |= Mask{1} << v;
  }
  for (int j : x.surj.jumps()) cover |= Mask{1} << j;
  if (popcount(cover) != k) return std::nullopt;
  return SmashSimplex{std::move(f), std::move(x)};
}

std::vector<SmashSimplex> smash_simplices(const SSet& X, int m, int k) {
  std::vector<SmashSimplex> out;
  if (k == 0 && m > 0) return out;
  for (Mask jumps = 0; jumps < (Mask{1} << k); ++jumps) {
    OrdMap s = surjection_from_jumps(k, jumps << 1);
    int n = s.cod();
    for (const auto& y : X.simplices(n)) {
      std::vector<int> f(m, 1);
      while (true) {
        if (auto t = smash_normalize(f, DegSimplex{s, y})) out.push_back(*t);
        int p = 0;
        while (p < m && f[p] == k) f[p++] = 1;
        if (p == m) break;
        ++f[p];
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

UElt::UElt(std::vector<int> labels, int degree) : labels_(std::move(labels)), deg_(degree) {
  if (!std::is_sorted(labels_.begin(), labels_.end()) ||
      std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
    throw std::invalid_argument("UElt: labels must be sorted and distinct");
}

void UElt::add(const SmashSimplex& s, const Rational& c) {
  if (c == 0) return;
  if (static_cast<int>(s.f.size()) != m() || s.dim() != deg_ + m())
    throw std::invalid_argument("UElt: simplex does not match labels or degree");
  auto [it, fresh] = terms_.emplace(s, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

UElt& UElt::operator+=(const UElt& o) {
  if (o.labels_ != labels_ || o.deg_ != deg_) throw std::invalid_argument("UElt: mismatched sum");
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

UElt& UElt::operator-=(const UElt& o) {
  if (o.labels_ != labels_ || o.deg_ != deg_) throw std::invalid_argument("UElt: mismatched difference");
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

UElt& UElt::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

UElt smash_boundary(const SSet& X, const UElt& u) {
  UElt out(u.labels(), u.degree() - 1);
  for (const auto& [s, c] : u.terms()) {
    int k = s.dim();
    if (k == 0) continue;
    for (int i = 0; i <= k; ++i) {
      std::vector<int> f;
      for (int v : s.f) f.push_back(face_jump(v, i));
      if (auto t = smash_normalize(std::move(f), X.face_of(s.x, i))) out.add(*t, parity(i) * c);
    }
  }
  return out;
}

ChainComplexQ smash_complex(const SSet& X, int m, int kmax) {
  ChainComplexQ c;
  std::vector<std::vector<SmashSimplex>> basis;
  for (int k = 0; k <= kmax; ++k) basis.push_back(smash_simplices(X, m, k));
  std::vector<int> labels(m);
  for (int a = 0; a < m; ++a) labels[a] = a;
  for (int k = 0; k <= kmax; ++k) {
    c.dims.push_back(static_cast<int>(basis[k].size()));
    c.labels.emplace_back(basis[k].size());
    QMatrix d(k > 0 ? static_cast<int>(basis[k - 1].size()) : 0, static_cast<int>(basis[k].size()));
    if (k > 0) {
      std::map<SmashSimplex, int> index;
      for (std::size_t r = 0; r < basis[k - 1].size(); ++r) index.emplace(basis[k - 1][r], static_cast<int>(r));
      for (std::size_t j = 0; j < basis[k].size(); ++j) {
        UElt e(labels, k - m);
        e.add(basis[k][j], 1);
        SparseVec col;
        UElt b = smash_boundary(X, e);
        for (const auto& [s, v] : b.terms()) col.emplace_back(index.at(s), v);
        d.set_column(static_cast<int>(j), std::move(col));
      }
    }
    c.d.push_back(std::move(d));
  }
  return c;
}

ThetaElt z_of(const std::vector<OrdMap>& alpha) {
  if (alpha.empty()) throw std::invalid_argument("z_of: give the domain through at least one map");
  int d = alpha.front().dom();
  int m = static_cast<int>(alpha.size());
  std::vector<int> f;
  for (const auto& a : alpha) {
    if (a.dom() != d || a.cod() != 1) throw std::invalid_argument("z_of: maps must go [d] -> [1]");
    if (!a.is_surjective()) return ThetaElt(d, d - m);
    f.push_back(dagger(a).values()[1]);
  }
  auto z = z_sign_and_wedge(f, d);
  if (!z) return ThetaElt(d, d - m);
  return Rational(z->first) * ThetaElt::basis(d, z->second);
}

PhiChain phi_sharp(const SSet& X, const UElt& u) {
  PhiChain out(u.degree());
  int sign = sharp_sign(u.m(), u.degree());
  for (const auto& [s, c] : u.terms()) {
    int k = s.dim();
    auto z = z_sign_and_wedge(s.f, k);
    if (!z) continue;
    PhiElt a = PhiElt::inject(k, full_mask(k), Rational(sign * z->first) * c * ThetaElt::basis(k, z->second));
    out += canonicalize_term(X, s.x, a);
  }
  return out;
}

UElt eta(const std::vector<int>& labels) {
  int m = static_cast<int>(labels.size());
  UElt out(labels, 0);
  std::vector<int> f(m);
  for (int a = 0; a < m; ++a) f[a] = a + 1;
  DegSimplex pt{OrdMap::constant(m, 0, 0), SimplexRef{0, 0}};
  do {
    auto z = z_sign_and_wedge(f, m);
    out.add(SmashSimplex{f, pt}, z->first);
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

UElt nu(const SSet& P, const UElt& u, const UElt& v) {
  const ProductInfo* info = P.product_info();
  if (!info) throw std::invalid_argument("nu: not a product");
  std::vector<int> seq = u.labels();
  seq.insert(seq.end(), v.labels().begin(), v.labels().end());
  std::vector<int> labels = seq;
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw std::invalid_argument("nu: label sets must be disjoint");
  std::vector<int> pos(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i)
    pos[i] = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), seq[i]) - labels.begin());
  int sign = perm_sign(seq) * parity(v.degree() * u.m());

  UElt out(labels, u.degree() + v.degree());
  for (const auto& [s, c] : u.terms())
    for (const auto& [t, e] : v.terms())
      for (const auto& sh : enumerate_shuffles({s.dim(), t.dim()})) {
        OrdMap zd = dagger(sh[0]), xd = dagger(sh[1]);
        std::vector<int> f(labels.size());
        for (std::size_t a = 0; a < s.f.size(); ++a) f[pos[a]] = zd.values()[s.f[a]];
        for (std::size_t b = 0; b < t.f.size(); ++b) f[pos[s.f.size() + b]] = xd.values()[t.f[b]];
        DegSimplex x = product_simplex(P, info->left->apply_map(sh[0], s.x), info->right->apply_map(sh[1], t.x));
        auto n = smash_normalize(std::move(f), x);
        if (!n) throw std::logic_error("nu: shuffle of nondegenerate simplices degenerated");
        out.add(*n, sign * shuffle_sign(sh) * c * e);
      }
  return out;
}

UElt relabel(const UElt& u, const std::map<int, int>& g) {
  std::vector<int> seq;
  for (int a : u.labels()) seq.push_back(g.at(a));
  std::vector<int> labels = seq;
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw std::invalid_argument("relabel: map is not injective");
  std::vector<int> pos(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i)
    pos[i] = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), seq[i]) - labels.begin());
  UElt out(labels, u.degree());
  int sign = perm_sign(seq);
  for (const auto& [s, c] : u.terms()) {
    std::vector<int> f(s.f.size());
    for (std::size_t a = 0; a < s.f.size(); ++a) f[pos[a]] = s.f[a];
    out.add(SmashSimplex{std::move(f), s.x}, sign * c);
  }
  return out;
}

UElt lambda_star(const SSet& X, const UElt& u, const std::map<int, int>& lambda, std::vector<int> target) {
  std::sort(target.begin(), target.end());
  UElt moved = relabel(u, lambda);
  std::vector<int> rest;
  std::set_difference(target.begin(), target.end(), moved.labels().begin(), moved.labels().end(),
                      std::back_inserter(rest));
  if (rest.size() + moved.labels().size() != target.size())
    throw std::invalid_argument("lambda_star: image not contained in target");
  if (rest.empty()) return moved;
  SSet P = product(X, delta(0));
  UElt big = nu(P, moved, eta(rest));
  UElt out(target, u.degree());
  for (const auto& [s, c] : big.terms()) out.add(SmashSimplex{s.f, project_left(P, s.x)}, c);
  return out;
}

UElt zeta1(const SSet& X, SimplexRef x, const std::vector<int>& nu_, Mask J) {
  int n = x.dim;
  if (x.index < 0 || x.index >= X.count(n)) throw std::invalid_argument("zeta1: no such simplex");
  if (static_cast<int>(nu_.size()) != n + 1) throw std::invalid_argument("zeta1: multi-index has wrong length");
  if (J & ~(full_mask(n) & ~Mask{1})) throw std::invalid_argument("zeta1: J must lie in [n]'");
  std::vector<int> sigma;
  for (int i = 0; i <= n; ++i) {
    if (nu_[i] < 0) throw std::invalid_argument("zeta1: negative exponent");
    sigma.insert(sigma.end(), nu_[i] + 1, i);
  }
  int d = static_cast<int>(sigma.size()) - 1;
  OrdMap s(n, sigma);
  OrdMap sd = dagger(s);
  Mask image = 0;
  for (int j : mask_elements(J)) image |= Mask{1} << sd.values()[j];
  std::vector<int> A;
  for (int a = 1; a <= d; ++a)
    if (!((image >> a) & 1)) A.push_back(a);
  int m = static_cast<int>(A.size());
  auto z = z_sign_and_wedge(A, d);
  UElt out(A, d - m);
  out.add(SmashSimplex{A, DegSimplex{s, x}}, z->first * sharp_sign(m, d - m));
  return out;
}

StabClass zeta(const SSet& X, SimplexRef x, const std::vector<int>& nu_, Mask J) {
  UElt r = zeta1(X, x, nu_, J);
  return StabClass{r.degree(), {r}};
}

StabClass zeta_prime(const SSet& X, const PhiChain& c) {
  StabClass out{c.degree(), {}};
  for (const auto& [x, a] : c.terms())
    for (const auto& [K, p] : a.terms())
      for (const auto& [mono, coef] : p.terms()) {
        std::vector<int> nu_(mono.e.begin(), mono.e.begin() + x.dim + 1);
        out.reps.push_back(coef * mono.factorial() * zeta1(X, x, nu_, K));
      }
  return out;
}

PhiChain psi(const SSet& X, const StabClass& s) {
  PhiChain out(s.degree);
  for (const auto& u : s.reps) out += phi_sharp(X, u);
  return out;
}

bool same_class(const SSet& X, const StabClass& a, const StabClass& b) {
  return a.degree == b.degree && psi(X, a) == psi(X, b);
}

UElt stabilize(const SSet& X, const StabClass& s, int N) {
  int need = 0;
  for (const auto& u : s.reps) need = std::max(need, u.m());
  if (N < 0) N = need;
  if (N < need) throw std::invalid_argument("stabilize: too few labels");
  std::vector<int> target(N);
  for (int i = 0; i < N; ++i) target[i] = i;
  UElt out(target, s.degree);
  for (const auto& u : s.reps) {
    std::map<int, int> lambda;
    for (int i = 0; i < u.m(); ++i) lambda[u.labels()[i]] = i;
    out += lambda_star(X, u, lambda, target);
  }
  return out;
}

UElt coinvariant_form(const UElt& u) {
  UElt out(u.labels(), u.degree());
  const auto& L = u.labels();
  for (const auto& [s, c] : u.terms()) {
    std::vector<int> order(s.f.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int p, int q) { return s.f[p] < s.f[q]; });
    bool repeated = false;
    for (std::size_t k = 1; k < order.size(); ++k) repeated = repeated || s.f[order[k]] == s.f[order[k - 1]];
    // a transposition of two labels with the same jump acts by -1 and fixes the simplex
    if (repeated) continue;
    std::map<int, int> g;
    for (std::size_t k = 0; k < order.size(); ++k) g[L[order[k]]] = L[k];
    UElt one(L, u.degree());
    one.add(s, c);
    out += relabel(one, g);
  }
  return out;
}

bool equal_in_colimit(const SSet& X, const StabClass& a, const StabClass& b, int extra) {
  if (a.degree != b.degree) return false;
  int N = 0;
  for (const auto* s : {&a, &b})
    for (const auto& u : s->reps) N = std::max(N, u.m());
  for (int M = N; M <= N + extra; ++M)
    if (coinvariant_form(stabilize(X, a, M) - stabilize(X, b, M)).is_zero()) return true;
  return false;
}

}  // namespace dechain
