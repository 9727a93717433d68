#include "dechain/phi_local.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace dechain {

PhiElt::PhiElt(int n, int degree) : n_(n), deg_(degree) {
  if (n < 0 || n >= kMaxVars) throw std::invalid_argument("PhiElt: index set too large");
}

PhiElt PhiElt::inject(int n, Mask J, const ThetaElt& a) {
  PhiElt p(n, a.degree());
  p.add(J, a);
  return p;
}

ThetaElt PhiElt::component(Mask J) const {
  auto it = comps_.find(J);
  if (it != comps_.end()) return it->second;
  return ThetaElt(popcount(J) - 1, deg_);
}

int PhiElt::weight() const {
  int w = -1;
  for (const auto& [J, a] : comps_) w = std::max(w, a.weight());
  return w;
}

void PhiElt::add(Mask J, const ThetaElt& a) {
  if (J == 0 || (J >> (n_ + 1))) throw std::invalid_argument("PhiElt::add: bad subset");
  if (a.n() != popcount(J) - 1 || a.degree() != deg_) throw std::invalid_argument("PhiElt::add: component shape mismatch");
  if (a.is_zero()) return;
  auto [it, inserted] = comps_.emplace(J, a);
  if (!inserted) {
    it->second += a;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

PhiElt& PhiElt::operator+=(const PhiElt& o) {
  if (o.n_ != n_ || o.deg_ != deg_) throw std::invalid_argument("PhiElt: shape mismatch");
  for (const auto& [J, a] : o.comps_) add(J, a);
  return *this;
}

PhiElt& PhiElt::operator-=(const PhiElt& o) {
  if (o.n_ != n_ || o.deg_ != deg_) throw std::invalid_argument("PhiElt: shape mismatch");
  for (const auto& [J, a] : o.comps_) add(J, -a);
  return *this;
}

PhiElt& PhiElt::operator*=(const Rational& c) {
  if (sgn(c) == 0) comps_.clear();
  for (auto& [J, a] : comps_) a *= c;
  return *this;
}

std::string PhiElt::str() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [J, a] : comps_) {
    if (!first) os << " + ";
    first = false;
    os << "i{";
    auto el = mask_elements(J);
    for (std::size_t i = 0; i < el.size(); ++i) os << (i ? "," : "") << el[i];
    os << "}[" << a.str() << "]";
  }
  return os.str();
}

namespace {

ThetaElt delta_prime_theta(const ThetaElt& a) {
  int p = a.n();
  ThetaElt out(p, a.degree() - 1);
  if (a.degree() == 0) return out;
  for (const auto& [mask, f] : a.terms())
    for (int j = 1; j <= p; ++j) {
      Poly g = f.partial(j);
      if (g.is_zero()) continue;
      out -= g * interior(dt(p, j), ThetaElt::basis(p, mask));
    }
  return out;
}

}  // namespace

ThetaElt delta_dblprime_face(const ThetaElt& a, int j) {
  return -restrict_face(interior(dt(a.n(), j), a), j);
}

PhiElt delta_prime(const PhiElt& a) {
  PhiElt out(a.n(), a.degree() - 1);
  for (const auto& [J, c] : a.components()) out.add(J, delta_prime_theta(c));
  return out;
}

PhiElt delta_dblprime(const PhiElt& a) {
  PhiElt out(a.n(), a.degree() - 1);
  if (a.degree() == 0) return out;
  for (const auto& [J, c] : a.components()) {
    auto el = mask_elements(J);
    if (el.size() < 2) continue;
    for (std::size_t q = 0; q < el.size(); ++q)
      out.add(J & ~(Mask{1} << el[q]), delta_dblprime_face(c, static_cast<int>(q)));
  }
  return out;
}

PhiElt delta(const PhiElt& a) { return delta_prime(a) + delta_dblprime(a); }

PhiElt push_phi(const std::vector<int>& sigma, int m, const PhiElt& a) {
  if (static_cast<int>(sigma.size()) != a.n() + 1) throw std::invalid_argument("push_phi: wrong domain");
  for (int v : sigma)
    if (v < 0 || v > m) throw std::invalid_argument("push_phi: map out of range");
  PhiElt out(m, a.degree());
  for (const auto& [J, c] : a.components()) {
    Mask K = 0;
    for (int j : mask_elements(J)) K |= Mask{1} << sigma[j];
    auto kel = mask_elements(K);
    std::vector<int> local;
    for (int j : mask_elements(J))
      local.push_back(static_cast<int>(std::lower_bound(kel.begin(), kel.end(), sigma[j]) - kel.begin()));
    out.add(K, pushforward(c, local, static_cast<int>(kel.size()) - 1));
  }
  return out;
}

Rational big_pair(const PhiElt& a, const FormElt& w) {
  if (a.n() != w.n()) throw std::invalid_argument("big_pair: index set mismatch");
  Rational total = 0;
  if (a.degree() != w.degree()) return total;
  for (const auto& [J, c] : a.components()) total += pair_theta_form(c, restrict_to(w, mask_elements(J))).integrate();
  return total;
}

FormElt xi_witness(const PhiElt& a) {
  if (a.is_zero()) throw std::invalid_argument("xi_witness: zero input");
  // J of maximal size, first in lexicographic order among those
  Mask J = 0;
  for (const auto& [K, c] : a.components())
    if (J == 0 || popcount(K) > popcount(J)) J = K;
  const ThetaElt& aj = a.components().at(J);
  auto el = mask_elements(J);
  int p = static_cast<int>(el.size()) - 1;
  int n = a.n();
  Mask K = aj.terms().begin()->first;
  // f_0 = <a_J, ds_K>
  Poly f0 = pair_theta_form(aj, FormElt::basis(p, K));
  RawPoly lifted;
  for (const auto& [m, c] : f0.terms()) {
    Monomial x;
    for (int q = 0; q <= p; ++q) x.e[el[q]] = m.e[q];
    raw_add_term(lifted, x, c);
  }
  Poly f = Poly::from_raw(n, lifted);
  Poly g = Poly::constant(n, 1);
  for (int j : el) g = g * Poly::t(n, j);
  // omega = wedge over k in K of d(sum_{i<k} t_{J_i})
  FormElt omega = FormElt::scalar(Poly::constant(n, 1));
  for (int k : mask_elements(K)) {
    FormElt l(n, 1);
    for (int i = 0; i < k; ++i) l += dt(n, el[i]);
    omega = wedge(omega, l);
  }
  return (f * g) * omega;
}

std::vector<Monomial> monomials_upto(int n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i > n) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur.e[i] = static_cast<std::uint8_t>(e);
      rec(i + 1, left - e);
    }
    cur.e[i] = 0;
  };
  rec(1, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> nonempty_subsets(int n) {
  std::vector<Mask> out;
  for (Mask m = 1; m < (Mask{1} << (n + 1)); ++m) out.push_back(m);
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

SparseVec LocalTruncation::coordinates(const PhiElt& a) const {
  int k = a.degree();
  if (k < 0 || k >= static_cast<int>(basis.size())) {
    if (a.is_zero()) return {};
    throw std::domain_error("LocalTruncation: degree outside the truncation");
  }
  SparseVec v;
  const auto& b = basis[k];
  for (const auto& [J, c] : a.components())
    for (const auto& [K, f] : c.terms())
      for (const auto& [nu, coef] : f.terms()) {
        LocalKey key{J, K, nu};
        auto it = std::lower_bound(b.begin(), b.end(), key);
        if (it == b.end() || !(*it == key)) throw std::domain_error("LocalTruncation: element outside the truncation");
        v.emplace_back(static_cast<int>(it - b.begin()), coef);
      }
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return v;
}

LocalTruncation local_truncated_complex(int n, int D, Exec exec) {
  LocalTruncation t;
  t.n = n;
  t.D = D;
  int top = std::min(n, D);
  t.basis.resize(top + 1);
  for (Mask J : nonempty_subsets(n)) {
    int p = popcount(J) - 1;
    for (Mask K = 0; K < (Mask{1} << (p + 1)); K += 2) {
      int k = popcount(K);
      if (k > top) continue;
      for (const auto& nu : monomials_upto(p, D - k)) t.basis[k].push_back({J, K, nu});
    }
  }
  for (auto& b : t.basis) std::sort(b.begin(), b.end());
  t.complex = assemble_complex(
      t.basis,
      [&](int, const LocalKey& key) {
        int p = popcount(key.J) - 1;
        PhiElt e = PhiElt::inject(n, key.J, Poly::monomial(p, key.nu) * ThetaElt::basis(p, key.K));
        PhiElt b = delta(e);
        std::vector<std::pair<LocalKey, Rational>> out;
        for (const auto& [J, c] : b.components())
          for (const auto& [K, f] : c.terms())
            for (const auto& [nu, coef] : f.terms()) out.push_back({{J, K, nu}, coef});
        return out;
      },
      exec);
  return t;
}

}  // namespace dechain
