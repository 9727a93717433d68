#include "dechain/forms.hpp"

#include <sstream>
#include <stdexcept>

namespace dechain {

std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

Mask mask_of(const std::vector<int>& elements) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 0 || e >= 32) throw std::invalid_argument("mask_of: element out of range");
    m |= Mask{1} << e;
  }
  return m;
}

bool subset_less(Mask a, Mask b) {
  while (a && b) {
    int la = __builtin_ctz(a), lb = __builtin_ctz(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inv = 0;
  for (Mask bb = b; bb; bb &= bb - 1) {
    int j = __builtin_ctz(bb);
    inv += popcount(a >> (j + 1));
  }
  return (inv % 2) ? -1 : 1;
}

template <class Tag>
std::string WedgeElt<Tag>::str() const {
  if (terms_.empty()) return "0";
  const char* sym = std::is_same_v<Tag, FormTag> ? "ds" : "w";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, f] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << f.str() << ")";
    for (int i : mask_elements(m)) os << "*" << sym << i;
  }
  return os.str();
}

template class WedgeElt<FormTag>;
template class WedgeElt<ThetaTag>;

FormElt ds(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("ds: index out of range");
  return FormElt::basis(n, Mask{1} << k);
}

FormElt dt(int n, int j) {
  if (j < 0 || j > n) throw std::invalid_argument("dt: index out of range");
  FormElt out(n, 1);
  if (j + 1 <= n) out.add(Mask{1} << (j + 1), Poly::constant(n, 1));
  if (j >= 1) out.add(Mask{1} << j, Poly::constant(n, -1));
  return out;
}

FormElt de_rham_d(const FormElt& w) {
  int n = w.n();
  FormElt out(n, w.degree() + 1);
  for (const auto& [m, f] : w.terms())
    for (int j = 1; j <= n; ++j) {
      Poly g = f.partial(j);
      if (g.is_zero()) continue;
      out += wedge(g * dt(n, j), FormElt::basis(n, m));
    }
  return out;
}

FormElt pullback(const FormElt& w, const std::vector<int>& alpha) {
  int k = static_cast<int>(alpha.size()) - 1;
  int n = w.n();
  // alpha^*(ds_j) = d(sum_{alpha(i) < j} t_i)
  std::vector<FormElt> image(n + 1);
  for (int j = 1; j <= n; ++j) {
    FormElt l(k, 1);
    for (int i = 0; i <= k; ++i)
      if (alpha[i] < j) l += dt(k, i);
    image[j] = l;
  }
  FormElt out(k, w.degree());
  for (const auto& [m, f] : w.terms()) {
    FormElt acc = FormElt::scalar(f.pullback(alpha));
    for (int j : mask_elements(m)) acc = wedge(acc, image[j]);
    out += acc;
  }
  return out;
}

FormElt restrict_to(const FormElt& w, const std::vector<int>& vertices) { return pullback(w, vertices); }

ThetaElt theta_top(int n) {
  Mask m = 0;
  for (int i = 1; i <= n; ++i) m |= Mask{1} << i;
  ThetaElt t = ThetaElt::basis(n, m);
  if (n % 2) t *= Rational(-1);
  return t;
}

ThetaElt e_difference(int n, int a, int b) {
  ThetaElt out(n, 1);
  if (a == b) return out;
  int lo = std::min(a, b), hi = std::max(a, b);
  Rational c = a < b ? 1 : -1;
  for (int k = lo + 1; k <= hi; ++k) out.add(Mask{1} << k, Poly::constant(n, c));
  return out;
}

ThetaElt interior(const FormElt& u, const ThetaElt& a) {
  if (u.degree() != 1) throw std::invalid_argument("interior: need a one-form");
  if (u.n() != a.n()) throw std::invalid_argument("interior: index set mismatch");
  ThetaElt out(a.n(), a.degree() - 1);
  if (a.degree() == 0) return out;
  for (const auto& [mu, g] : u.terms()) {
    int j = __builtin_ctz(mu);
    for (const auto& [ma, f] : a.terms()) {
      if (!(ma & mu)) continue;
      int r = popcount(ma & ((Mask{1} << j) - 1)) + 1;  // 1-based position of j
      Poly c = g * f;
      if (r % 2) c *= Rational(-1);
      out.add(ma & ~mu, c);
    }
  }
  return out;
}

Poly pair_theta_form(const ThetaElt& a, const FormElt& w) {
  if (a.n() != w.n()) throw std::invalid_argument("pair_theta_form: index set mismatch");
  Poly out(a.n());
  if (a.degree() != w.degree()) return out;
  int k = a.degree();
  bool neg = ((k * (k - 1) / 2) % 2) == 1;
  for (const auto& [m, f] : a.terms()) {
    auto it = w.terms().find(m);
    if (it == w.terms().end()) continue;
    out += f * it->second;
  }
  if (neg) out *= Rational(-1);
  return out;
}

ThetaElt pushforward_wedge(int n, Mask mask, const std::vector<int>& sigma, int m) {
  if (static_cast<int>(sigma.size()) != n + 1) throw std::invalid_argument("pushforward_wedge: wrong domain");
  ThetaElt acc = ThetaElt::basis(m, 0);
  for (int i : mask_elements(mask)) {
    acc = wedge(acc, e_difference(m, sigma[i - 1], sigma[i]));
    if (acc.is_zero()) return ThetaElt(m, popcount(mask));
  }
  return acc;
}

ThetaElt pushforward(const ThetaElt& a, const std::vector<int>& sigma, int m) {
  ThetaElt out(m, a.degree());
  for (const auto& [mask, f] : a.terms()) {
    ThetaElt w = pushforward_wedge(a.n(), mask, sigma, m);
    if (w.is_zero()) continue;
    out += f.pushforward(sigma, m) * w;
  }
  return out;
}

ThetaElt bullet(const OrdMap& sigma, const ThetaElt& a) {
  if (sigma.cod() != a.n()) throw std::invalid_argument("bullet: index set mismatch");
  OrdMap sd = dagger(sigma);
  int n = sigma.dom();
  ThetaElt out(n, a.degree());
  for (const auto& [mask, f] : a.terms()) {
    Mask m2 = 0;
    for (int j : mask_elements(mask)) m2 |= Mask{1} << sd(j);
    out.add(m2, f.pullback(sigma));
  }
  return out;
}

ThetaElt restrict_face(const ThetaElt& a, int j) {
  int n = a.n();
  if (n < 1 || j < 0 || j > n) throw std::invalid_argument("restrict_face: index out of range");
  int kappa = j < n ? j + 1 : n;
  ThetaElt out(n - 1, a.degree());
  for (const auto& [mask, f] : a.terms()) {
    if (mask & (Mask{1} << kappa)) continue;
    Mask low = mask & ((Mask{1} << kappa) - 1);
    Mask high = mask >> (kappa + 1);
    out.add(low | (high << kappa), f.restrict_face(j));
  }
  return out;
}

}  // namespace dechain
