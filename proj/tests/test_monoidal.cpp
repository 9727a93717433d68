#include "dechain/monoidal.hpp"
#include "doctest.h"

using namespace dechain;

namespace {

int koszul(int a, int b) { return (a * b) % 2 ? -1 : 1; }

Shuffle swapped(const Shuffle& s) { return Shuffle({s[1], s[0]}); }

}  // namespace

TEST_CASE("mu on Theta: small cases") {
  Shuffle a({OrdMap(1, {0, 1, 1}), OrdMap(1, {0, 0, 1})});
  Shuffle b({OrdMap(1, {0, 0, 1}), OrdMap(1, {0, 1, 1})});
  CHECK(mu_theta(a, theta_top(1), theta_top(1)) == theta_top(2));
  CHECK(mu_theta(b, theta_top(1), theta_top(1)) == -theta_top(2));
  CHECK(shuffle_sign(a) == 1);
  CHECK(shuffle_sign(b) == -1);

  Rng rng(1);
  for (int n = 0; n <= 3; ++n) {
    auto ss = enumerate_shuffles({n, 0});
    REQUIRE(ss.size() == 1);
    CHECK(shuffle_sign(ss[0]) == 1);
    ThetaElt x = random_theta(rng, n, std::min(n, 1), 2);
    CHECK(mu_theta(ss[0], x, ThetaElt::basis(0, 0)) == x);
  }
  int total = 0;
  for (const auto& s : enumerate_shuffles({2, 1})) total += shuffle_sign(s) * shuffle_sign(s);
  CHECK(total == 3);
}

TEST_CASE("twist compatibility, exhaustive on basis elements") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; n + m <= 3; ++m)
      for (const auto& s : enumerate_shuffles({n, m}))
        for (Mask ma = 0; ma < (Mask(1) << n); ++ma)
          for (Mask mb = 0; mb < (Mask(1) << m); ++mb) {
            ThetaElt a = ThetaElt::basis(n, ma << 1), b = ThetaElt::basis(m, mb << 1);
            int sign = koszul(popcount(ma), popcount(mb));
            CHECK(mu_theta(s, a, b) == sign * mu_theta(swapped(s), b, a));
          }
}

TEST_CASE("pairing identity for mu on Theta") {
  Rng rng(2);
  for (int trial = 0; trial < 150; ++trial) {
    int n = uniform_int(rng, 0, 3), m = uniform_int(rng, 0, 3);
    auto ss = enumerate_shuffles({n, m});
    const Shuffle& s = ss[uniform_int(rng, 0, static_cast<int>(ss.size()) - 1)];
    int p = uniform_int(rng, 0, n), q = uniform_int(rng, 0, m);
    ThetaElt a = random_theta(rng, n, p, 2), b = random_theta(rng, m, q, 2);
    FormElt w = random_form(rng, n, p, 2), v = random_form(rng, m, q, 2);
    Poly lhs = pair_theta_form(mu_theta(s, a, b), mu_form(s, w, v));
    Poly rhs = pair_theta_form(a, w).pullback(s[0]) * pair_theta_form(b, v).pullback(s[1]);
    CHECK(lhs == koszul(q, p) * rhs);
  }
}

TEST_CASE("shuffle product of chains") {
  SSet d1 = delta(1);
  SSet P = product(d1, d1);
  Chain e{1, {{0, 1}}};
  Chain prod = shuffle_product_N(P, e, e);
  REQUIRE(prod.terms.size() == 2);
  std::vector<Rational> signs;
  for (const auto& s : enumerate_shuffles({1, 1})) {
    DegSimplex t = product_simplex(P, {s[0], {1, 0}}, {s[1], {1, 0}});
    signs.push_back(prod.terms.at(t.base.index));
  }
  CHECK(signs == std::vector<Rational>{1, -1});

  // vertex times chain is a single degenerate-vertex term
  Chain v{0, {{0, 1}}};
  Chain ve = shuffle_product_N(P, v, e);
  REQUIRE(ve.terms.size() == 1);
  DegSimplex t = product_simplex(P, DegSimplex{OrdMap::constant(1, 0, 0), SimplexRef{0, 0}}, nondegenerate({1, 0}));
  CHECK(ve.terms.begin()->first == t.base.index);

  Rng rng(3);
  for (const auto& [X, Y] : std::vector<std::pair<SSet, SSet>>{{delta(1), delta(2)}, {sphere(1), delta(1)}, {delta(2), sphere(2)}}) {
    SSet Q = product(X, Y);
    for (int trial = 0; trial < 20; ++trial) {
      int n = uniform_int(rng, 0, X.dim()), m = uniform_int(rng, 0, Y.dim());
      Chain x{n, {}}, y{m, {}};
      for (int i = 0; i < X.count(n); ++i) x.add(i, random_rational(rng));
      for (int j = 0; j < Y.count(m); ++j) y.add(j, random_rational(rng));
      Chain lhs = chain_boundary(Q, shuffle_product_N(Q, x, y));
      Chain r1 = shuffle_product_N(Q, chain_boundary(X, x), y);
      Chain r2 = shuffle_product_N(Q, x, chain_boundary(Y, y));
      Chain rhs{lhs.degree, {}};
      for (const auto& [k, c] : r1.terms) rhs.add(k, c);
      for (const auto& [k, c] : r2.terms) rhs.add(k, (n % 2 ? -1 : 1) * c);
      CHECK(lhs.terms == rhs.terms);
    }
  }
}

TEST_CASE("mu on Phi: unit, phi square, Leibniz") {
  Rng rng(4);
  SSet pt = delta(0);
  for (const SSet& X : {delta(1), sphere(2)}) {
    SSet P = product(X, pt);
    PhiChain u(0);
    u.add({0, 0}, ThetaElt::basis(0, 0));
    PhiChain a = random_phi_chain(rng, X, 1, 3);
    LeafChain got = leaf_chain(P, mu_phi(P, a, u));
    LeafChain want;
    for (const auto& [x, al] : a.terms())
      want.emplace(std::vector<DegSimplex>{nondegenerate(x), DegSimplex{OrdMap::constant(x.dim, 0, 0), SimplexRef{0, 0}}}, al);
    CHECK(got == want);
  }

  std::vector<std::pair<SSet, SSet>> pairs{{delta(1), delta(1)}, {sphere(1), delta(2)}, {delta(2), sphere(1)}};
  for (const auto& [X, Y] : pairs) {
    SSet P = product(X, Y);
    for (int n = 0; n <= X.dim(); ++n)
      for (int m = 0; m <= Y.dim(); ++m)
        for (int i = 0; i < X.count(n); ++i)
          for (int j = 0; j < Y.count(m); ++j) {
            Chain x{n, {{i, 1}}}, y{m, {{j, 1}}};
            CHECK(mu_phi(P, phi_of_chain(x), phi_of_chain(y)) == phi_of_chain(shuffle_product_N(P, x, y)));
          }
    for (int trial = 0; trial < 40; ++trial) {
      int p = uniform_int(rng, 0, 2), q = uniform_int(rng, 0, 2);
      PhiChain a = random_phi_chain(rng, X, p, 3, 2), b = random_phi_chain(rng, Y, q, 3, 2);
      PhiChain lhs = phi_boundary(P, mu_phi(P, a, b));
      PhiChain rhs = mu_phi(P, phi_boundary(X, a), b);
      PhiChain r2 = mu_phi(P, a, phi_boundary(Y, b));
      if (p % 2) r2 = Rational(-1) * r2;
      rhs += r2;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("mu on Phi: symmetry and associativity") {
  Rng rng(5);
  SSet d1 = delta(1);
  SSet P = product(d1, d1), Q = product(d1, d1);
  for (int trial = 0; trial < 30; ++trial) {
    int p = uniform_int(rng, 0, 1), q = uniform_int(rng, 0, 1);
    PhiChain a = random_phi_chain(rng, d1, p, 3, 2), b = random_phi_chain(rng, d1, q, 3, 2);
    CHECK(swap_factors(P, Q, mu_phi(P, a, b)) == Rational(koszul(p, q)) * mu_phi(Q, b, a));
  }
  SSet L = product(P, d1), R = product(d1, Q);
  for (int trial = 0; trial < 30; ++trial) {
    int p = uniform_int(rng, 0, 1), q = uniform_int(rng, 0, 1), r = uniform_int(rng, 0, 1);
    PhiChain a = random_phi_chain(rng, d1, p, 2, 2), b = random_phi_chain(rng, d1, q, 2, 2),
             c = random_phi_chain(rng, d1, r, 2, 2);
    LeafChain left = leaf_chain(L, mu_phi(L, mu_phi(P, a, b), c));
    LeafChain right = leaf_chain(R, mu_phi(R, a, mu_phi(Q, b, c)));
    CHECK(left == right);
  }
}

TEST_CASE("mu is adjoint to the product of forms") {
  Rng rng(6);
  std::vector<std::pair<SSet, SSet>> pairs{{delta(1), delta(1)}, {sphere(1), delta(1)}, {delta(2), sphere(1)}};
  for (const auto& [X, Y] : pairs) {
    SSet P = product(X, Y);
    for (int p = 0; p <= std::min(X.dim(), 1); ++p)
      for (int q = 0; q <= std::min(Y.dim(), 1); ++q) {
        auto bx = cochain_basis(X, p, 2), by = cochain_basis(Y, q, 2);
        REQUIRE(!bx.empty());
        REQUIRE(!by.empty());
        for (int trial = 0; trial < 6; ++trial) {
          CochainForm w = random_cochain(rng, bx, p), v = random_cochain(rng, by, q);
          PhiChain a = random_phi_chain(rng, X, p, 3), b = random_phi_chain(rng, Y, q, 3);
          CochainForm wv = omega_wedge(P, w, v);
          CHECK_FALSE(validate_cochain(P, wv).has_value());
          Rational lhs = global_pair(P, mu_phi(P, a, b), wv);
          Rational rhs = koszul(q, p) * global_pair(X, a, w) * global_pair(Y, b, v);
          CHECK(lhs == rhs);
        }
      }
  }
}
