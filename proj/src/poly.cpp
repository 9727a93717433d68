#include "dechain/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dechain {

namespace {

Rational factorial(int k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(r);
}

void check_n(int n) {
  if (n < 0 || n >= kMaxVars) throw std::invalid_argument("Poly: index set too large");
}

// powers[k] = base^k
std::vector<RawPoly> powers_of(const RawPoly& base, int k) {
  std::vector<RawPoly> out;
  RawPoly one;
  one[Monomial{}] = 1;
  out.push_back(one);
  for (int i = 1; i <= k; ++i) out.push_back(raw_multiply(out.back(), base));
  return out;
}

}  // namespace

int Monomial::degree() const {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

Rational Monomial::factorial() const {
  Rational r = 1;
  for (auto x : e)
    if (x > 1) r *= dechain::factorial(x);
  return r;
}

Monomial monomial_of(const std::vector<int>& exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("monomial_of: too many variables");
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 255) throw std::invalid_argument("monomial_of: bad exponent");
    m.e[i] = static_cast<std::uint8_t>(exponents[i]);
  }
  return m;
}

void raw_add_term(RawPoly& p, const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) p.erase(it);
  }
}

RawPoly raw_multiply(const RawPoly& a, const RawPoly& b) {
  RawPoly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m;
      for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint8_t>(ma.e[i] + mb.e[i]);
      raw_add_term(out, m, ca * cb);
    }
  return out;
}

Rational integrate_raw(int n, const RawPoly& p) {
  Rational total = 0;
  for (const auto& [m, c] : p) total += c * m.factorial() / factorial(n + m.degree());
  return total;
}

Poly::Poly(int n) : n_(n) { check_n(n); }

Poly Poly::constant(int n, const Rational& c) {
  Poly p(n);
  raw_add_term(p.terms_, Monomial{}, c);
  return p;
}

Poly Poly::t(int n, int i) {
  if (i < 0 || i > n) throw std::invalid_argument("Poly::t: index out of range");
  Monomial m;
  m.e[i] = 1;
  return monomial(n, m);
}

Poly Poly::s(int n, int k) {
  Poly p(n);
  for (int j = 0; j < k && j <= n; ++j) p += t(n, j);
  return p;
}

Poly Poly::monomial(int n, const Monomial& m, const Rational& c) {
  RawPoly r;
  raw_add_term(r, m, c);
  return from_raw(n, r);
}

Poly Poly::from_raw(int n, const RawPoly& raw) {
  Poly p(n);
  int top = 0;
  for (const auto& [m, c] : raw) {
    for (int i = n + 1; i < kMaxVars; ++i)
      if (m.e[i]) throw std::invalid_argument("Poly::from_raw: variable outside the index set");
    top = std::max<int>(top, m.e[0]);
  }
  if (top == 0) {
    p.terms_ = raw;
    return p;
  }
  RawPoly base;
  raw_add_term(base, Monomial{}, 1);
  for (int i = 1; i <= n; ++i) {
    Monomial m;
    m.e[i] = 1;
    raw_add_term(base, m, -1);
  }
  auto pw = powers_of(base, top);
  for (const auto& [m, c] : raw) {
    Monomial rest = m;
    rest.e[0] = 0;
    for (const auto& [mb, cb] : pw[m.e[0]]) {
      Monomial x;
      for (int i = 0; i < kMaxVars; ++i) x.e[i] = static_cast<std::uint8_t>(rest.e[i] + mb.e[i]);
      raw_add_term(p.terms_, x, c * cb);
    }
  }
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.n_ != n_) throw std::invalid_argument("Poly: index set mismatch");
  for (const auto& [m, c] : o.terms_) raw_add_term(terms_, m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.n_ != n_) throw std::invalid_argument("Poly: index set mismatch");
  for (const auto& [m, c] : o.terms_) raw_add_term(terms_, m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Poly: index set mismatch");
  Poly p(a.n_);
  p.terms_ = raw_multiply(a.terms_, b.terms_);
  return p;
}

Poly Poly::partial(int j) const {
  if (j < 1 || j > n_) throw std::invalid_argument("Poly::partial: index out of range");
  Poly p(n_);
  for (const auto& [m, c] : terms_) {
    if (m.e[j] == 0) continue;
    Monomial x = m;
    x.e[j] -= 1;
    raw_add_term(p.terms_, x, c * m.e[j]);
  }
  return p;
}

Poly Poly::grad(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != n_ + 1) throw std::invalid_argument("grad: wrong vector length");
  Rational sum = 0;
  for (const auto& v : x) sum += v;
  if (sgn(sum) != 0) throw std::invalid_argument("grad: vector must sum to zero");
  // the canonical lift has no t_0, so the i = 0 term vanishes
  Poly p(n_);
  for (int i = 1; i <= n_; ++i)
    if (sgn(x[i]) != 0) p += partial(i) * x[i];
  return p;
}

Poly Poly::pullback(const std::vector<int>& alpha) const {
  int k = static_cast<int>(alpha.size()) - 1;
  check_n(k);
  std::vector<RawPoly> fibre(n_ + 1);
  for (int i = 0; i <= k; ++i) {
    if (alpha[i] < 0 || alpha[i] > n_) throw std::invalid_argument("Poly::pullback: map out of range");
    Monomial m;
    m.e[i] = 1;
    raw_add_term(fibre[alpha[i]], m, 1);
  }
  std::vector<int> maxexp(n_ + 1, 0);
  for (const auto& [m, c] : terms_)
    for (int j = 0; j <= n_; ++j) maxexp[j] = std::max<int>(maxexp[j], m.e[j]);
  std::vector<std::vector<RawPoly>> pw(n_ + 1);
  for (int j = 0; j <= n_; ++j) pw[j] = powers_of(fibre[j], maxexp[j]);
  RawPoly out;
  for (const auto& [m, c] : terms_) {
    RawPoly acc;
    acc[Monomial{}] = c;
    for (int j = 0; j <= n_ && !acc.empty(); ++j)
      if (m.e[j]) acc = raw_multiply(acc, pw[j][m.e[j]]);
    for (const auto& [mm, cc] : acc) raw_add_term(out, mm, cc);
  }
  return from_raw(k, out);
}

Poly pushforward_raw(int n, const RawPoly& p, const std::vector<int>& sigma, int m) {
  if (static_cast<int>(sigma.size()) != n + 1) throw std::invalid_argument("pushforward: map has wrong domain");
  std::vector<bool> hit(m + 1, false);
  for (int v : sigma) {
    if (v < 0 || v > m) throw std::invalid_argument("pushforward: map out of range");
    hit[v] = true;
  }
  for (bool h : hit)
    if (!h) throw std::invalid_argument("pushforward: map is not surjective");
  RawPoly out;
  for (const auto& [mono, c] : p) {
    std::vector<int> mu(m + 1, -1);
    for (int i = 0; i <= n; ++i) mu[sigma[i]] += mono.e[i] + 1;
    Monomial target = monomial_of(mu);
    raw_add_term(out, target, c * mono.factorial() / target.factorial());
  }
  return Poly::from_raw(m, out);
}

Poly Poly::pushforward(const std::vector<int>& sigma, int m) const { return pushforward_raw(n_, terms_, sigma, m); }

Poly Poly::restrict_face(int j) const {
  std::vector<int> v;
  for (int i = 0; i <= n_; ++i)
    if (i != j) v.push_back(i);
  return restrict_to(v);
}

Poly Poly::restrict_to(const std::vector<int>& vertices) const {
  if (vertices.empty()) throw std::invalid_argument("restrict_to: empty face");
  return pullback(vertices);
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_fraction_string(c);
    for (int i = 0; i <= n_; ++i)
      if (m.e[i]) os << "*t" << i << (m.e[i] > 1 ? "^" + std::to_string(m.e[i]) : "");
  }
  return os.str();
}

}  // namespace dechain
