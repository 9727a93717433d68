#include <set>

#include "dechain/simplex_category.hpp"
#include "doctest.h"

using namespace dechain;

TEST_CASE("compose basics") {
  OrdMap a(1, {0, 1, 1});
  CHECK(compose(OrdMap::identity(1), a) == a);
  CHECK(compose(OrdMap(0, {0, 0}), a) == OrdMap(0, {0, 0, 0}));
  CHECK_THROWS(compose(a, a));
  CHECK_THROWS(OrdMap(2, {1, 0}));
}

TEST_CASE("dagger") {
  CHECK(dagger(OrdMap(1, {0, 0, 1})) == OrdMap(2, {0, 2}));
  CHECK(dagger(OrdMap::identity(3)) == OrdMap::identity(3));
  OrdMap a(1, {0, 1, 1}), b(0, {0, 0});
  CHECK(dagger(compose(b, a)) == compose(dagger(a), dagger(b)));
  CHECK_THROWS(dagger(OrdMap(2, {0, 0, 2})));
}

TEST_CASE("pointed subsets") {
  PointedSubset a(2, {0, 2});
  CHECK(a.pi() == OrdMap(1, {0, 0, 1}));
  CHECK(a.sigma() == OrdMap(2, {0, 2}));
  CHECK(a.eps() == OrdMap(2, {0, 0, 2}));
  CHECK(PointedSubset::full(3).eps().is_identity());
  CHECK(PointedSubset(1, {0}).eps() == OrdMap(1, {0, 0}));
  CHECK(compose(a.pi(), a.sigma()).is_identity());
  CHECK_THROWS(PointedSubset(2, {1, 2}));
}

TEST_CASE("pointed subset inclusions") {
  for (int n = 0; n <= 4; ++n)
    for (unsigned am = 0; am < (1u << n); ++am)
      for (unsigned bm = 0; bm < (1u << n); ++bm) {
        if ((am & bm) != am) continue;
        std::vector<int> ae{0}, be{0};
        for (int i = 0; i < n; ++i) {
          if (am >> i & 1) ae.push_back(i + 1);
          if (bm >> i & 1) be.push_back(i + 1);
        }
        PointedSubset A(n, ae), B(n, be);
        OrdMap m = compose(A.pi(), B.sigma());
        CHECK(m.is_surjective());
        CHECK(compose(m, B.pi()) == A.pi());
      }
}

TEST_CASE("eps_meet agrees with iterated idempotents") {
  CHECK(eps_meet(PointedSubset(2, {0, 1}), PointedSubset(2, {0, 2})).elements() == std::vector<int>{0});
  PointedSubset a(3, {0, 1, 3}), b(3, {0, 2, 3});
  OrdMap e = compose(a.eps(), b.eps());
  OrdMap p = e;
  for (int i = 0; i < 10; ++i) p = compose(p, e);
  CHECK(p == compose(p, e));
  CHECK(p == eps_meet(a, b).eps());
  CHECK(p == PointedSubset(3, {0, 3}).eps());
}

TEST_CASE("shuffle enumeration") {
  CHECK(enumerate_shuffles({2, 1}).size() == 3);
  auto s = enumerate_shuffles({1, 1});
  REQUIRE(s.size() == 2);
  CHECK(s[0][0] == OrdMap(1, {0, 1, 1}));
  CHECK(s[0][1] == OrdMap(1, {0, 0, 1}));
  CHECK(s[1][0] == OrdMap(1, {0, 0, 1}));
  CHECK(s[1][1] == OrdMap(1, {0, 1, 1}));
  auto t = enumerate_shuffles({3, 0});
  REQUIRE(t.size() == 1);
  CHECK(t[0][0].is_identity());
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; n + m <= 8; ++m) {
      auto all = enumerate_shuffles({n, m});
      CHECK(all.size() == binomial(n + m, n));
      std::set<Shuffle> distinct(all.begin(), all.end());
      CHECK(distinct.size() == all.size());
    }
}

TEST_CASE("operad bijections") {
  CHECK(enumerate_shuffles({1, 1, 1}).size() == enumerate_shuffles({2, 1}).size() * enumerate_shuffles({1, 1}).size());
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; m + n <= 4; ++n)
      for (int p = 0; m + n + p <= 4; ++p) {
        std::set<Shuffle> imgL, imgR;
        for (const auto& s : enumerate_shuffles({m + n, p}))
          for (const auto& t : enumerate_shuffles({m, n})) imgL.insert(operad_L(s, t));
        for (const auto& s : enumerate_shuffles({m, n + p}))
          for (const auto& t : enumerate_shuffles({n, p})) imgR.insert(operad_R(s, t));
        auto all = enumerate_shuffles({m, n, p});
        std::set<Shuffle> target(all.begin(), all.end());
        CHECK(imgL == target);
        CHECK(imgR == target);
        for (const auto& x : all) {
          auto l = operad_L_inverse(x);
          CHECK(operad_L(l.outer, l.inner) == x);
          auto r = operad_R_inverse(x);
          CHECK(operad_R(r.outer, r.inner) == x);
        }
      }
  auto p0 = enumerate_shuffles({2, 0});
  for (const auto& t : enumerate_shuffles({1, 1})) {
    Shuffle l = operad_L(p0[0], t);
    CHECK(l[0] == t[0]);
    CHECK(l[1] == t[1]);
  }
}
