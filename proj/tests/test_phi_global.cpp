#include "dechain/phi_global.hpp"
#include "doctest.h"

using namespace dechain;

namespace {

ThetaElt one(int n) { return ThetaElt::basis(n, 0); }

}  // namespace

TEST_CASE("canonicalization") {
  SSet s1 = sphere(1);
  SimplexRef v{0, 0}, e{1, 0};
  // nondegenerate x with J = [m] is unchanged
  PhiElt full = PhiElt::inject(1, 0b11, ThetaElt::basis(1, 0b10));
  PhiChain c = canonicalize_term(s1, nondegenerate(e), full);
  CHECK(c.term(e) == ThetaElt::basis(1, 0b10));
  PhiChain face = canonicalize_term(s1, nondegenerate(e), PhiElt::inject(1, 0b10, one(0)));
  CHECK(face.terms().size() == 1);
  CHECK(face.term(v) == one(0));
  // degenerate simplex collapsing [1] -> [0] kills w_1
  DegSimplex degv{OrdMap(0, {0, 0}), v};
  CHECK(canonicalize_term(s1, degv, full).is_zero());
}

TEST_CASE("boundary in split form") {
  SSet s1 = sphere(1);
  SimplexRef e{1, 0};
  PhiChain c(1);
  c.add(e, ThetaElt::basis(1, 0b10));
  CHECK(phi_boundary(s1, c).is_zero());

  SSet d1 = delta(1);
  PhiChain b(1);
  b.add({1, 0}, ThetaElt::basis(1, 0b10));
  PhiChain want(0);
  want.add(d1.face({1, 0}, 0).base, one(0));
  want.add(d1.face({1, 0}, 1).base, -one(0));
  CHECK(phi_boundary(d1, b) == want);

  PhiChain v(0);
  v.add({0, 0}, one(0));
  CHECK(phi_boundary(d1, v).is_zero());
}

TEST_CASE("phi on generators") {
  Chain v{0, {{0, Rational(1)}}};
  CHECK(phi_of_chain(v).term({0, 0}) == one(0));
  Chain e{1, {{0, Rational(1)}}};
  CHECK(phi_of_chain(e).term({1, 0}) == ThetaElt::basis(1, 0b10));
  for (const SSet& X : {delta(2), sphere(2), product(sphere(1), sphere(1)), boundary_delta(3)})
    for (const auto& x : X.all_simplices()) {
      Chain c{x.dim, {{x.index, Rational(1)}}};
      CHECK(phi_boundary(X, phi_of_chain(c)) == phi_of_chain(chain_boundary(X, c)));
    }
}

TEST_CASE("truncations") {
  auto g = truncated_complex(delta(0), 3);
  CHECK(g.complex.dims == std::vector<int>{1});
  auto s = truncated_complex(sphere(1), 1);
  CHECK(s.complex.dims == std::vector<int>{3, 1});
  auto s3 = truncated_complex(sphere(1), 3);
  CHECK(stable_image_dims(s.complex, s.basis, s3.complex, s3.basis)[0] == 1);
  for (const SSet& X : {delta(3), sphere(2), product(sphere(1), sphere(1)), product(delta(1), delta(1))})
    for (int D = 0; D <= 4; ++D) CHECK_NOTHROW(check_complex(truncated_complex(X, D).complex));
}

TEST_CASE("serial and parallel assembly agree") {
  SSet X = product(sphere(1), delta(1));
  auto a = truncated_complex(X, 3, Exec::serial);
  auto b = truncated_complex(X, 3, Exec::parallel);
  REQUIRE(a.complex.dims == b.complex.dims);
  for (std::size_t k = 0; k < a.complex.d.size(); ++k) CHECK(a.complex.d[k].dense() == b.complex.d[k].dense());
}

TEST_CASE("homology via truncations") {
  auto r = phi_homology(sphere(1), "sphere:1", 2);
  CHECK(r.matches_N);
  CHECK(r.stable_image_dims == std::vector<int>{1, 1});
  auto t = phi_homology(product(sphere(1), sphere(1)), "torus", 3);
  CHECK(t.matches_N);
  CHECK(t.stable_image_dims == std::vector<int>{1, 2, 1});
}

TEST_CASE("cochain validation") {
  SSet d1 = delta(1);
  CochainForm c;
  c.degree = 0;
  for (const auto& x : d1.all_simplices()) c.values.emplace(x, FormElt::scalar(Poly::constant(x.dim, 1)));
  CHECK_FALSE(validate_cochain(d1, c).has_value());
  CochainForm w;
  w.degree = 1;
  w.values.emplace(SimplexRef{1, 0}, ds(1, 1));
  CHECK_FALSE(validate_cochain(d1, w).has_value());
  CochainForm bad;
  bad.degree = 0;
  bad.values.emplace(SimplexRef{0, 0}, FormElt::scalar(Poly::constant(0, 1)));
  bad.values.emplace(SimplexRef{1, 0}, FormElt::scalar(Poly::constant(1, 2)));
  auto v = validate_cochain(d1, bad);
  REQUIRE(v.has_value());
  CHECK(v->simplex == SimplexRef{1, 0});
}

TEST_CASE("global pairing") {
  SSet d1 = delta(1);
  PhiChain v(0);
  v.add({0, 0}, one(0));
  CochainForm c;
  c.degree = 0;
  for (const auto& x : d1.all_simplices()) c.values.emplace(x, FormElt::scalar(Poly::constant(x.dim, 1)));
  CHECK(global_pair(d1, v, c) == 1);
  PhiChain e(1);
  e.add({1, 0}, ThetaElt::basis(1, 0b10));
  CochainForm w;
  w.degree = 1;
  w.values.emplace(SimplexRef{1, 0}, ds(1, 1));
  CHECK(global_pair(d1, e, w) == 1);
  CHECK(global_pair(d1, e, c) == 0);

  Rng rng(8);
  for (const SSet& X : {sphere(1), sphere(2), product(delta(1), delta(1))}) {
    for (int d = 0; d < std::max(1, X.dim()); ++d) {
      auto basis = cochain_basis(X, d, 2);
      REQUIRE(!basis.empty());
      for (const auto& b : basis) CHECK_FALSE(validate_cochain(X, b).has_value());
      for (int trial = 0; trial < 10; ++trial) {
        CochainForm om = random_cochain(rng, basis, d);
        PhiChain ch = random_phi_chain(rng, X, d + 1, 4);
        Rational lhs = global_pair(X, phi_boundary(X, ch), om);
        Rational rhs = global_pair(X, ch, cochain_d(om));
        if (d % 2 == 0) rhs = -rhs;
        CHECK(lhs == rhs);
      }
    }
  }
}
