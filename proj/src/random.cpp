#include "dechain/random.hpp"

#include <algorithm>
#include <numeric>

namespace dechain {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_rational(Rng& rng) {
  int num = 0;
  while (num == 0) num = uniform_int(rng, -5, 5);
  Rational q(num, uniform_int(rng, 1, 4));
  q.canonicalize();
  return q;
}

Monomial random_monomial(Rng& rng, int n, int d, bool with_t0) {
  Monomial m;
  int total = uniform_int(rng, 0, std::max(0, d));
  int lo = with_t0 ? 0 : 1;
  if (n < lo) return m;
  for (int i = 0; i < total; ++i) ++m.e[uniform_int(rng, lo, n)];
  return m;
}

Poly random_poly(Rng& rng, int n, int d, int terms) {
  Poly p(n);
  for (int i = 0; i < terms; ++i) p += Poly::monomial(n, random_monomial(rng, n, d), random_rational(rng));
  return p;
}

Mask random_wedge_mask(Rng& rng, int n, int k) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 1);
  std::shuffle(idx.begin(), idx.end(), rng);
  Mask m = 0;
  for (int i = 0; i < k && i < n; ++i) m |= Mask{1} << idx[i];
  return m;
}

ThetaElt random_theta(Rng& rng, int n, int degree, int poly_degree, int terms) {
  ThetaElt a(n, degree);
  if (degree > n) return a;
  for (int i = 0; i < terms; ++i) a.add(random_wedge_mask(rng, n, degree), random_poly(rng, n, poly_degree, 2));
  return a;
}

FormElt random_form(Rng& rng, int n, int degree, int poly_degree, int terms) {
  FormElt a(n, degree);
  if (degree > n) return a;
  for (int i = 0; i < terms; ++i) a.add(random_wedge_mask(rng, n, degree), random_poly(rng, n, poly_degree, 2));
  return a;
}

PhiElt random_phi(Rng& rng, int n, int m, int w, int components) {
  PhiElt a(n, m);
  auto subsets = nonempty_subsets(n);
  for (int i = 0; i < components; ++i) {
    Mask J = subsets[uniform_int(rng, 0, static_cast<int>(subsets.size()) - 1)];
    int p = popcount(J) - 1;
    if (m > p || w < m) continue;
    a.add(J, random_theta(rng, p, m, w - m, 2));
  }
  return a;
}

std::vector<int> random_map(Rng& rng, int n, int m, bool surjective) {
  std::vector<int> v(n + 1);
  if (surjective) {
    for (int i = 0; i <= n; ++i) v[i] = i <= m ? i : uniform_int(rng, 0, m);
    std::shuffle(v.begin(), v.end(), rng);
  } else {
    for (auto& x : v) x = uniform_int(rng, 0, m);
  }
  return v;
}

OrdMap random_surjection(Rng& rng, int n, int m) {
  std::vector<int> jumps(n);
  std::iota(jumps.begin(), jumps.end(), 1);
  std::shuffle(jumps.begin(), jumps.end(), rng);
  jumps.resize(m);
  std::vector<int> v(n + 1, 0);
  for (int j : jumps)
    for (int t = j; t <= n; ++t) ++v[t];
  return OrdMap(m, v);
}

}  // namespace dechain
