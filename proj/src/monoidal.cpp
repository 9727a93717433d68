#include "dechain/monoidal.hpp"

#include <stdexcept>

namespace dechain {

ThetaElt mu_theta(const Shuffle& s, const ThetaElt& a, const ThetaElt& b) {
  if (s.arity() != 2 || s[0].cod() != a.n() || s[1].cod() != b.n()) throw std::invalid_argument("mu_theta: size mismatch");
  return wedge(bullet(s[0], a), bullet(s[1], b));
}

FormElt mu_form(const Shuffle& s, const FormElt& w, const FormElt& v) {
  if (s.arity() != 2 || s[0].cod() != w.n() || s[1].cod() != v.n()) throw std::invalid_argument("mu_form: size mismatch");
  return wedge(pullback(w, s[0]), pullback(v, s[1]));
}

int shuffle_sign(const Shuffle& s) {
  int n = s[0].cod(), m = s[1].cod();
  ThetaElt t = mu_theta(s, theta_top(n), theta_top(m));
  ThetaElt top = theta_top(n + m);
  if (t == top) return 1;
  if (t == -top) return -1;
  throw std::logic_error("shuffle_sign: product of top classes is not a top class");
}

Chain shuffle_product_N(const SSet& P, const Chain& x, const Chain& y) {
  Chain out;
  out.degree = x.degree + y.degree;
  if (x.degree < 0 || y.degree < 0) return out;
  auto shuffles = enumerate_shuffles({x.degree, y.degree});
  for (const auto& s : shuffles) {
    int sg = shuffle_sign(s);
    for (const auto& [i, cx] : x.terms)
      for (const auto& [j, cy] : y.terms) {
        DegSimplex p = product_simplex(P, {s[0], {x.degree, i}}, {s[1], {y.degree, j}});
        if (p.degenerate()) continue;
        out.add(p.base.index, sg * cx * cy);
      }
  }
  return out;
}

PhiChain mu_phi(const SSet& P, const PhiChain& a, const PhiChain& b) {
  PhiChain out(a.degree() + b.degree());
  for (const auto& [x, alpha] : a.terms())
    for (const auto& [y, beta] : b.terms())
      for (const auto& s : enumerate_shuffles({x.dim, y.dim})) {
        DegSimplex p = product_simplex(P, {s[0], x}, {s[1], y});
        if (p.degenerate()) throw std::logic_error("mu_phi: shuffle produced a degenerate simplex");
        out.add(p.base, mu_theta(s, alpha, beta));
      }
  return out;
}

std::vector<DegSimplex> leaf_coordinates(const SSet& P, const DegSimplex& s) {
  const ProductInfo* info = P.product_info();
  if (!info) return {s};
  const auto& [a, b] = info->coords[s.base.dim][s.base.index];
  DegSimplex la = info->left->apply_map(s.surj, a);
  DegSimplex lb = info->right->apply_map(s.surj, b);
  auto out = leaf_coordinates(*info->left, la);
  auto rest = leaf_coordinates(*info->right, lb);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

LeafChain leaf_chain(const SSet& P, const PhiChain& c) {
  LeafChain out;
  for (const auto& [x, a] : c.terms()) out.emplace(leaf_coordinates(P, nondegenerate(x)), a);
  return out;
}

PhiChain swap_factors(const SSet& P, const SSet& Q, const PhiChain& c) {
  const ProductInfo* info = P.product_info();
  if (!info || !Q.product_info()) throw std::invalid_argument("swap_factors: not a product");
  PhiChain out(c.degree());
  for (const auto& [x, a] : c.terms()) {
    const auto& [u, v] = info->coords[x.dim][x.index];
    DegSimplex q = product_simplex(Q, v, u);
    out.add(q.base, a);
  }
  return out;
}

}  // namespace dechain
