#include <algorithm>
#include <functional>
#include <random>

#include "dechain/sset.hpp"
#include "doctest.h"

using namespace dechain;

namespace {

int euler(const SSet& x) {
  int e = 0;
  auto c = x.counts();
  for (std::size_t i = 0; i < c.size(); ++i) e += (i % 2 ? -1 : 1) * c[i];
  return e;
}

// Homology from the dense reference rank, independent of the sparse eliminator.
std::vector<int> reference_homology(const SSet& x) {
  auto c = normalized_chains(x);
  std::vector<int> r(c.dims.size() + 1, 0);
  for (std::size_t k = 1; k < c.dims.size(); ++k) r[k] = rank_reference(c.d[k]);
  std::vector<int> h;
  for (std::size_t k = 0; k < c.dims.size(); ++k) h.push_back(c.dims[k] - r[k] - r[k + 1]);
  return h;
}

}  // namespace

TEST_CASE("standard models") {
  CHECK(delta(2).counts() == std::vector<int>{3, 3, 1});
  CHECK(boundary_delta(2).counts() == std::vector<int>{3, 3});
  CHECK(sphere(1).counts() == std::vector<int>{1, 1});
  CHECK(sphere(2).counts() == std::vector<int>{1, 1, 2});
  CHECK(euler(sphere(2)) == 2);
  CHECK(BA(2).counts() == std::vector<int>{4, 5, 2});
  CHECK(dBA(2).counts() == std::vector<int>{4, 4});
  for (int n = 0; n <= 3; ++n) CHECK_NOTHROW(delta(n).validate());
  for (int a = 0; a <= 3; ++a) CHECK_NOTHROW(sphere(a).validate());
}

TEST_CASE("apply_map") {
  SSet d1 = delta(1);
  SimplexRef e{1, 0};
  CHECK(d1.apply_map(OrdMap::identity(1), e) == nondegenerate(e));
  DegSimplex c = d1.apply_map(OrdMap(1, {0, 0}), e);
  CHECK(c.surj == OrdMap(0, {0, 0}));
  CHECK(d1.id(c.base) == "0");
  SSet d2 = delta(2);
  DegSimplex f = d2.apply_map(OrdMap::coface(2, 1), SimplexRef{2, 0});
  CHECK(f.surj.is_identity());
  CHECK(d2.id(f.base) == "02");
}

TEST_CASE("apply_map is contravariantly functorial") {
  std::mt19937 rng(11);
  SSet x = product(sphere(1), delta(1));
  auto random_map = [&](int n, int m) {
    std::vector<int> v(n + 1);
    for (auto& t : v) t = std::uniform_int_distribution<int>(0, m)(rng);
    std::sort(v.begin(), v.end());
    return OrdMap(m, v);
  };
  for (int trial = 0; trial < 200; ++trial) {
    auto all = x.all_simplices();
    SimplexRef s = all[rng() % all.size()];
    int k = std::uniform_int_distribution<int>(0, 3)(rng);
    int l = std::uniform_int_distribution<int>(0, 3)(rng);
    OrdMap a = random_map(k, s.dim), b = random_map(l, k);
    CHECK(x.apply_map(b, x.apply_map(a, s)) == x.apply_map(compose(a, b), s));
  }
}

TEST_CASE("EZ normal form is unique on degeneracies of nondegenerate simplices") {
  SSet x = product(delta(1), delta(1));
  for (const auto& s : x.all_simplices())
    for (int n = s.dim; n <= s.dim + 2; ++n) {
      std::vector<int> v(n + 1);
      // every surjection [n] -> [s.dim]
      std::function<void(int, int)> rec = [&](int i, int cur) {
        if (i > n) {
          if (cur != s.dim) return;
          OrdMap a(s.dim, v);
          CHECK(x.apply_map(a, s) == DegSimplex{a, s});
          return;
        }
        for (int t = cur; t <= std::min(cur + 1, s.dim); ++t) {
          if (i == 0 && t != 0) continue;
          v[i] = t;
          rec(i + 1, t);
        }
      };
      rec(0, 0);
    }
}

TEST_CASE("products") {
  SSet p = product(delta(1), delta(1));
  CHECK(p.counts() == std::vector<int>{4, 5, 2});
  CHECK_NOTHROW(p.validate());
  SSet t = product(sphere(1), sphere(1));
  CHECK(euler(t) == 0);
  CHECK_NOTHROW(t.validate());
  SSet xp = product(delta(2), delta(0));
  CHECK(xp.counts() == delta(2).counts());
  CHECK(homology_dims(normalized_chains(t)) == std::vector<int>{1, 2, 1});
}

TEST_CASE("quotients") {
  SSet d1 = delta(1);
  SSet c = quotient(d1, {{0, 0}, {0, 1}});
  CHECK(c.counts() == std::vector<int>{1, 1});
  CHECK_THROWS(quotient(d1, {}));
  CHECK_THROWS(quotient(d1, {{1, 0}}));
  SSet d2 = delta(2);
  SSet s2 = quotient(d2, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}});
  CHECK(s2.counts() == std::vector<int>{1, 0, 1});
  CHECK_NOTHROW(s2.validate());
  CHECK(homology_dims(normalized_chains(s2)) == std::vector<int>{1, 0, 1});
}

TEST_CASE("normalized chains") {
  CHECK(homology_dims(normalized_chains(delta(0))) == std::vector<int>{1});
  CHECK(homology_dims(normalized_chains(sphere(1))) == std::vector<int>{1, 1});
  CHECK(homology_dims(normalized_chains(boundary_delta(3))) == std::vector<int>{1, 0, 1});
  CHECK(reference_homology(boundary_delta(3)) == std::vector<int>{1, 0, 1});
  for (int a = 1; a <= 3; ++a) {
    auto h = reference_homology(sphere(a));
    std::vector<int> want(a + 1, 0);
    want[0] = 1;
    want[a] = 1;
    CHECK(h == want);
  }
  for (const SSet& x : {delta(3), boundary_delta(2), sphere(2), product(sphere(1), sphere(1))})
    CHECK_NOTHROW(check_complex(normalized_chains(x)));
}
