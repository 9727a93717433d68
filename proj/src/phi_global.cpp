#include "dechain/phi_global.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dechain {

ThetaElt PhiChain::term(SimplexRef x) const {
  auto it = terms_.find(x);
  if (it != terms_.end()) return it->second;
  return ThetaElt(x.dim, deg_);
}

void PhiChain::add(SimplexRef x, const ThetaElt& a) {
  if (a.n() != x.dim || a.degree() != deg_) throw std::invalid_argument("PhiChain::add: shape mismatch");
  if (a.is_zero()) return;
  auto [it, inserted] = terms_.emplace(x, a);
  if (!inserted) {
    it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PhiChain& PhiChain::operator+=(const PhiChain& o) {
  if (o.deg_ != deg_) throw std::invalid_argument("PhiChain: degree mismatch");
  for (const auto& [x, a] : o.terms_) add(x, a);
  return *this;
}

PhiChain& PhiChain::operator-=(const PhiChain& o) {
  if (o.deg_ != deg_) throw std::invalid_argument("PhiChain: degree mismatch");
  for (const auto& [x, a] : o.terms_) add(x, -a);
  return *this;
}

PhiChain& PhiChain::operator*=(const Rational& c) {
  if (sgn(c) == 0) terms_.clear();
  for (auto& [x, a] : terms_) a *= c;
  return *this;
}

std::string PhiChain::str(const SSet& X) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, a] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << X.id(x) << "(x)[" << a.str() << "]";
  }
  return os.str();
}

PhiChain canonicalize_term(const SSet& X, const DegSimplex& x, const PhiElt& a) {
  if (a.n() != x.dim()) throw std::invalid_argument("canonicalize_term: dimension mismatch");
  PhiChain out(a.degree());
  for (const auto& [J, beta] : a.components()) {
    // x (x) (iota_J)_* beta = iota_J^* x (x) beta, then push along the degeneracy
    OrdMap iota(x.dim(), mask_elements(J));
    DegSimplex face = X.apply_map(iota, x);
    if (face.surj.is_identity()) {
      out.add(face.base, beta);
    } else {
      out.add(face.base, pushforward(beta, face.surj.values(), face.surj.cod()));
    }
  }
  return out;
}

PhiChain phi_boundary(const SSet& X, const PhiChain& c) {
  PhiChain out(c.degree() - 1);
  if (c.degree() == 0) return out;
  for (const auto& [x, a] : c.terms()) {
    PhiElt e = PhiElt::inject(x.dim, (Mask{1} << (x.dim + 1)) - 1, a);
    out += canonicalize_term(X, nondegenerate(x), delta(e));
  }
  return out;
}

PhiChain phi_of_chain(const Chain& c) {
  PhiChain out(c.degree);
  if (c.degree < 0) return out;
  ThetaElt t = theta_top(c.degree);
  if (c.degree % 2) t *= Rational(-1);
  for (const auto& [k, coef] : c.terms) out.add({c.degree, k}, coef * t);
  return out;
}

bool operator<(const GlobalKey& a, const GlobalKey& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.nu != b.nu) return a.nu < b.nu;
  return subset_less(a.K, b.K);
}

SparseVec GlobalTruncation::coordinates(const PhiChain& c) const {
  int k = c.degree();
  if (k < 0 || k >= static_cast<int>(basis.size())) {
    if (c.is_zero()) return {};
    throw std::domain_error("GlobalTruncation: degree outside the truncation");
  }
  const auto& b = basis[k];
  SparseVec v;
  for (const auto& [x, a] : c.terms())
    for (const auto& [K, f] : a.terms())
      for (const auto& [nu, coef] : f.terms()) {
        GlobalKey key{x, nu, K};
        auto it = std::lower_bound(b.begin(), b.end(), key);
        if (it == b.end() || !(*it == key)) throw std::domain_error("GlobalTruncation: element outside the truncation");
        v.emplace_back(static_cast<int>(it - b.begin()), coef);
      }
  std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  return v;
}

PhiChain GlobalTruncation::element(int degree, const SparseVec& v) const {
  PhiChain c(degree);
  for (const auto& [i, coef] : v) {
    const GlobalKey& key = basis.at(degree).at(i);
    c.add(key.x, Poly::monomial(key.x.dim, key.nu, coef) * ThetaElt::basis(key.x.dim, key.K));
  }
  return c;
}

GlobalTruncation truncated_complex(const SSet& X, int D, Exec exec) {
  if (D < 0) throw std::invalid_argument("truncated_complex: negative weight bound");
  GlobalTruncation g;
  g.D = D;
  int top = std::min(std::max(0, X.dim()), D);
  g.basis.resize(top + 1);
  for (const auto& x : X.all_simplices()) {
    int m = x.dim;
    for (Mask K = 0; K < (Mask{1} << (m + 1)); K += 2) {
      int k = popcount(K);
      if (k > top) continue;
      for (const auto& nu : monomials_upto(m, D - k)) g.basis[k].push_back({x, nu, K});
    }
  }
  for (auto& b : g.basis) std::sort(b.begin(), b.end());
  try {
    g.complex = assemble_complex(
        g.basis,
        [&](int k, const GlobalKey& key) {
          PhiChain c(k);
          c.add(key.x, Poly::monomial(key.x.dim, key.nu) * ThetaElt::basis(key.x.dim, key.K));
          PhiChain b = phi_boundary(X, c);
          std::vector<std::pair<GlobalKey, Rational>> out;
          for (const auto& [y, a] : b.terms())
            for (const auto& [K, f] : a.terms())
              for (const auto& [nu, coef] : f.terms()) out.push_back({{y, nu, K}, coef});
          return out;
        },
        exec);
  } catch (const std::domain_error& e) {
    throw std::domain_error("truncated_complex: weight filtration not closed at D=" + std::to_string(D) + " (" +
                            e.what() + ")");
  }
  return g;
}

ChainMapQ phi_matrix(const SSet& X, const GlobalTruncation& g) {
  ChainMapQ f;
  for (int k = 0; k <= std::max(0, X.dim()); ++k) {
    int rows = k < static_cast<int>(g.basis.size()) ? static_cast<int>(g.basis[k].size()) : 0;
    QMatrix m(rows, X.count(k));
    for (int j = 0; j < X.count(k); ++j) {
      Chain c;
      c.degree = k;
      c.add(j, 1);
      m.set_column(j, g.coordinates(phi_of_chain(c)));
    }
    f.f.push_back(std::move(m));
  }
  return f;
}

HomologyReport phi_homology(const SSet& X, const std::string& name, int D, Exec exec) {
  HomologyReport rep;
  rep.complex = name;
  rep.D = D;
  ChainComplexQ n = normalized_chains(X);
  check_complex(n);
  rep.homology_N = homology_dims(n);
  GlobalTruncation g0 = truncated_complex(X, D, exec);
  GlobalTruncation g1 = truncated_complex(X, D + 1, exec);
  GlobalTruncation g2 = truncated_complex(X, D + 2, exec);
  GlobalTruncation g3 = truncated_complex(X, D + 3, exec);
  for (const auto* g : {&g0, &g1, &g2, &g3}) check_complex(g->complex);
  rep.dims_GD = g0.complex.dims;
  rep.stable_image_dims = stable_image_dims(g0.complex, g0.basis, g2.complex, g2.basis);
  rep.stable_image_dims_next = stable_image_dims(g1.complex, g1.basis, g3.complex, g3.basis);
  ChainMapQ phi = phi_matrix(X, g2);
  if (auto bad = chain_map_defect(n, g2.complex, phi)) {
    rep.diagnostic = "phi is not a chain map in degree " + std::to_string(*bad);
    return rep;
  }
  for (int k = 0; k <= n.top(); ++k) rep.phi_image_dims.push_back(induced_image_dim(n, g2.complex, phi, k));
  auto pad = [](std::vector<int> v, std::size_t len) {
    v.resize(std::max(len, v.size()), 0);
    return v;
  };
  std::size_t len = std::max({rep.homology_N.size(), rep.stable_image_dims.size(), rep.stable_image_dims_next.size()});
  auto hn = pad(rep.homology_N, len);
  bool stable = pad(rep.stable_image_dims, len) == pad(rep.stable_image_dims_next, len);
  bool equal = pad(rep.stable_image_dims, len) == hn;
  bool generated = pad(rep.phi_image_dims, len) == hn;
  rep.matches_N = stable && equal && generated;
  if (!stable)
    rep.diagnostic = "stabilization not reached: images at D and D+1 differ";
  else if (!equal)
    rep.diagnostic = "stable image differs from the homology of normalized chains";
  else if (!generated)
    rep.diagnostic = "classes of phi do not span the stable image";
  return rep;
}

FormElt CochainForm::value(const SSet&, SimplexRef x) const {
  auto it = values.find(x);
  if (it != values.end()) return it->second;
  return FormElt(x.dim, degree);
}

FormElt cochain_value(const SSet& X, const CochainForm& w, const DegSimplex& x) {
  FormElt v = w.value(X, x.base);
  if (x.surj.is_identity()) return v;
  return pullback(v, x.surj);
}

std::optional<CochainViolation> validate_cochain(const SSet& X, const CochainForm& w) {
  for (const auto& [x, v] : w.values)
    if (v.n() != x.dim || v.degree() != w.degree) return CochainViolation{x, -1};
  for (const auto& x : X.all_simplices()) {
    if (x.dim == 0) continue;
    FormElt v = w.value(X, x);
    for (int i = 0; i <= x.dim; ++i) {
      FormElt lhs = pullback(v, OrdMap::coface(x.dim, i));
      FormElt rhs = cochain_value(X, w, X.face(x, i));
      if (!(lhs == rhs)) return CochainViolation{x, i};
    }
  }
  return std::nullopt;
}

CochainForm cochain_d(const CochainForm& w) {
  CochainForm out;
  out.degree = w.degree + 1;
  for (const auto& [x, v] : w.values) {
    FormElt dv = de_rham_d(v);
    if (!dv.is_zero()) out.values.emplace(x, std::move(dv));
  }
  return out;
}

CochainForm cochain_scale(const CochainForm& w, const Rational& c) {
  CochainForm out;
  out.degree = w.degree;
  if (sgn(c) == 0) return out;
  for (const auto& [x, v] : w.values) out.values.emplace(x, c * v);
  return out;
}

CochainForm cochain_add(const CochainForm& a, const CochainForm& b) {
  if (a.degree != b.degree) throw std::invalid_argument("cochain_add: degree mismatch");
  CochainForm out = a;
  for (const auto& [x, v] : b.values) {
    auto [it, inserted] = out.values.emplace(x, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) out.values.erase(it);
    }
  }
  return out;
}

Rational global_pair(const SSet& X, const PhiChain& c, const CochainForm& w) {
  Rational total = 0;
  if (c.degree() != w.degree) return total;
  for (const auto& [x, a] : c.terms()) total += pair_theta_form(a, w.value(X, x)).integrate();
  return total;
}

CochainForm omega_wedge(const SSet& P, const CochainForm& w, const CochainForm& v) {
  const ProductInfo* info = P.product_info();
  if (!info) throw std::invalid_argument("omega_wedge: not a product");
  CochainForm out;
  out.degree = w.degree + v.degree;
  for (const auto& s : P.all_simplices()) {
    const auto& [a, b] = info->coords[s.dim][s.index];
    FormElt val = wedge(cochain_value(*info->left, w, a), cochain_value(*info->right, v, b));
    if (!val.is_zero()) out.values.emplace(s, std::move(val));
  }
  return out;
}

std::vector<CochainForm> cochain_basis(const SSet& X, int d, int p) {
  struct Unknown {
    SimplexRef x;
    Mask K;
    Monomial nu;
  };
  std::vector<Unknown> unknowns;
  for (const auto& x : X.all_simplices()) {
    if (x.dim < d) continue;
    for (Mask K = 0; K < (Mask{1} << (x.dim + 1)); K += 2) {
      if (popcount(K) != d) continue;
      for (const auto& nu : monomials_upto(x.dim, p)) unknowns.push_back({x, K, nu});
    }
  }
  // each face condition contributes rows keyed by (simplex, face, mask, monomial)
  std::map<std::tuple<SimplexRef, int, Mask, Monomial>, int> rows;
  std::vector<SparseVec> cols(unknowns.size());
  auto emit = [&](std::size_t col, SimplexRef x, int i, const FormElt& f, const Rational& sign) {
    for (const auto& [K, g] : f.terms())
      for (const auto& [nu, c] : g.terms()) {
        auto key = std::make_tuple(x, i, K, nu);
        auto it = rows.emplace(key, static_cast<int>(rows.size())).first;
        cols[col].emplace_back(it->second, sign * c);
      }
  };
  // faces that hit each simplex y: (x, i) with d_i x = (sigma, y)
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto& un = unknowns[u];
    FormElt basis_form = Poly::monomial(un.x.dim, un.nu) * FormElt::basis(un.x.dim, un.K);
    if (un.x.dim >= 1)
      for (int i = 0; i <= un.x.dim; ++i) emit(u, un.x, i, pullback(basis_form, OrdMap::coface(un.x.dim, i)), 1);
  }
  for (const auto& x : X.all_simplices()) {
    if (x.dim == 0) continue;
    for (int i = 0; i <= x.dim; ++i) {
      const DegSimplex& f = X.face(x, i);
      for (std::size_t u = 0; u < unknowns.size(); ++u) {
        if (!(unknowns[u].x == f.base)) continue;
        const auto& un = unknowns[u];
        FormElt basis_form = Poly::monomial(un.x.dim, un.nu) * FormElt::basis(un.x.dim, un.K);
        emit(u, x, i, pullback(basis_form, f.surj), -1);
      }
    }
  }
  QMatrix m(static_cast<int>(rows.size()), static_cast<int>(unknowns.size()));
  for (std::size_t u = 0; u < unknowns.size(); ++u) m.set_column(static_cast<int>(u), std::move(cols[u]));
  std::vector<CochainForm> out;
  for (const auto& k : kernel_basis(m)) {
    CochainForm w;
    w.degree = d;
    for (const auto& [u, c] : k) {
      const auto& un = unknowns[u];
      FormElt term = Poly::monomial(un.x.dim, un.nu, c) * FormElt::basis(un.x.dim, un.K);
      auto [it, inserted] = w.values.emplace(un.x, term);
      if (!inserted) it->second += term;
    }
    for (auto it = w.values.begin(); it != w.values.end();) it = it->second.is_zero() ? w.values.erase(it) : std::next(it);
    out.push_back(std::move(w));
  }
  return out;
}

CochainForm random_cochain(Rng& rng, const std::vector<CochainForm>& basis, int degree) {
  CochainForm w;
  w.degree = degree;
  for (const auto& b : basis)
    if (uniform_int(rng, 0, 2) == 0) w = cochain_add(w, cochain_scale(b, random_rational(rng)));
  return w;
}

PhiChain random_phi_chain(Rng& rng, const SSet& X, int d, int w, int terms) {
  PhiChain c(d);
  auto all = X.all_simplices();
  for (int i = 0; i < terms; ++i) {
    SimplexRef x = all[uniform_int(rng, 0, static_cast<int>(all.size()) - 1)];
    if (x.dim < d || w < d) continue;
    c.add(x, random_theta(rng, x.dim, d, w - d, 2));
  }
  return c;
}

}  // namespace dechain
