#include <cstdio>
#include <fstream>

#include "dechain/io.hpp"
#include "dechain/monoidal.hpp"
#include "doctest.h"

using namespace dechain;

TEST_CASE("rationals parse and print as p/q") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(parse_rational("+2/3") == Rational(2, 3));
  CHECK(to_fraction_string(parse_rational("-10/4")) == "-5/2");
  CHECK(to_fraction_string(Rational(0)) == "0/1");
  for (const char* bad : {"", "1/0", "a", "1/-2", "1.5", "/3", "2/"}) CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("builder expressions") {
  CHECK(build_space("delta:2").counts() == std::vector<int>{3, 3, 1});
  CHECK(build_space("boundary:2").counts() == std::vector<int>{3, 3});
  CHECK(build_space("sphere:1").counts() == std::vector<int>{1, 1});
  CHECK(build_space("product:(delta:1,delta:1)").counts() == std::vector<int>{4, 5, 2});
  SSet circle = build_space("quotient:(delta:1,boundary:1)");
  CHECK(circle.counts() == std::vector<int>{1, 1});
  SSet s2 = build_space("quotient:(delta:2,skeleton:(delta:2,1))");
  CHECK(homology_dims(normalized_chains(s2)) == std::vector<int>{1, 0, 1});
  SSet torus = build_space("product:(sphere:1,sphere:1)");
  CHECK(homology_dims(normalized_chains(torus)) == std::vector<int>{1, 2, 1});
  for (const char* bad : {"delta", "delta:", "cube:2", "product:(delta:1)", "delta:1x", "quotient:(delta:1,delta:2)",
                          "file:/nonexistent.json"})
    CHECK_THROWS_AS(build_space(bad), std::invalid_argument);
}

TEST_CASE("simplicial set JSON round trip") {
  for (const char* expr : {"delta:3", "sphere:2", "product:(sphere:1,delta:1)", "quotient:(delta:2,boundary:2)"}) {
    SSet x = build_space(expr);
    Json j = sset_to_json(x);
    SSet y = sset_from_json(j);
    CHECK(y.counts() == x.counts());
    CHECK(sset_to_json(y) == j);
    CHECK(homology_dims(normalized_chains(y)) == homology_dims(normalized_chains(x)));
  }
  Json j = sset_to_json(build_space("delta:1"));
  CHECK(j.dump() ==
        R"({"dims":1,"simplices":{"0":[{"id":"0","faces":[]},{"id":"1","faces":[]}],"1":[{"id":"01","faces":[{"surj":[0],"base":"1"},{"surj":[0],"base":"0"}]}]}})");

  const std::string path = "sset_roundtrip_test.json";
  {
    std::ofstream out(path);
    out << sset_to_json(build_space("boundary:3")).dump();
  }
  CHECK(homology_dims(normalized_chains(build_space("file:" + path))) == std::vector<int>{1, 0, 1});
  std::remove(path.c_str());

  Json dangling = Json::parse(R"({"dims":1,"simplices":{"0":[{"id":"a","faces":[]}],"1":[{"id":"e","faces":[{"surj":[0],"base":"a"},{"surj":[0],"base":"z"}]}]}})");
  CHECK_THROWS_AS(sset_from_json(dangling), std::invalid_argument);
  Json broken = Json::parse(R"({"dims":2,"simplices":{"0":[{"id":"a","faces":[]},{"id":"b","faces":[]}],
     "1":[{"id":"e","faces":[{"surj":[0],"base":"b"},{"surj":[0],"base":"a"}]}],
     "2":[{"id":"t","faces":[{"surj":[0,1],"base":"e"},{"surj":[0,1],"base":"e"},{"surj":[0,1],"base":"e"}]}]}})");
  CHECK_THROWS_AS(sset_from_json(broken), std::invalid_argument);
  CHECK_THROWS_AS(sset_from_json(Json::parse(R"({"simplices":{}})")), std::invalid_argument);
}

TEST_CASE("chain and cochain JSON, pairing and product") {
  SSet d1 = build_space("delta:1");
  Json chain = Json::parse(R"({"degree":1,"terms":[{"simplex":"01","dim":1,"theta":[{"coef":"1","t":[0,0],"w":[1]}]}]})");
  Json form = Json::parse(R"({"degree":1,"values":[{"simplex":"01","dim":1,"form":[{"coef":"1/1","t":[0,0],"ds":[1]}]}]})");
  PhiChain c = phi_chain_from_json(d1, chain);
  CochainForm w = cochain_from_json(d1, form);
  CHECK(to_fraction_string(global_pair(d1, c, w)) == "1/1");
  CHECK(phi_chain_from_json(d1, phi_chain_to_json(d1, c)) == c);
  CHECK(cochain_to_json(d1, cochain_from_json(d1, cochain_to_json(d1, w))) == cochain_to_json(d1, w));

  // degree mismatch pairs to zero
  Json one = Json::parse(R"({"degree":0,"values":[{"simplex":"0","dim":0,"form":[{"coef":"1","t":[0],"ds":[]}]},
     {"simplex":"1","dim":0,"form":[{"coef":"1","t":[0],"ds":[]}]},{"simplex":"01","dim":1,"form":[{"coef":"1","t":[0,0],"ds":[]}]}]})");
  CHECK(to_fraction_string(global_pair(d1, c, cochain_from_json(d1, one))) == "0/1");

  // t_0 in the input is eliminated: t_0 = 1 - t_1
  Json with_t0 = Json::parse(R"({"degree":0,"terms":[{"simplex":"01","dim":1,"theta":[{"coef":"2","t":[1,0],"w":[]}]}]})");
  PhiChain e = phi_chain_from_json(d1, with_t0);
  CHECK(e.term({1, 0}) == ThetaElt::scalar(Poly::constant(1, 2) - Poly::t(1, 1) * Rational(2)));

  // listing wedge indices out of order picks up the sign
  SSet d2 = build_space("delta:2");
  Json swapped = Json::parse(R"({"degree":2,"terms":[{"simplex":"012","dim":2,"theta":[{"coef":"1","t":[0,0,0],"w":[2,1]}]}]})");
  CHECK(phi_chain_from_json(d2, swapped).term({2, 0}) == -ThetaElt::basis(2, 0b110));

  SSet P = product(d1, d1);
  PhiChain prod = mu_phi(P, c, c);
  CHECK(prod.terms().size() == 2);
  Json pj = phi_chain_to_json(P, prod);
  CHECK(pj["terms"].size() == 2);
  CHECK(pj["terms"][0]["theta"][0]["coef"] == "1/1");
  CHECK(pj["terms"][1]["theta"][0]["coef"] == "-1/1");

  CHECK_THROWS_AS(phi_chain_from_json(d1, Json::parse(R"({"degree":1,"terms":[{"simplex":"xy","dim":1,"theta":[]}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(phi_chain_from_json(d1, Json::parse(R"({"degree":1,"terms":[{"simplex":"01","dim":1,"theta":[{"coef":"1","t":[0],"w":[1]}]}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(phi_chain_from_json(d1, Json::parse(R"({"terms":[]})")), std::invalid_argument);
}

TEST_CASE("homology report JSON carries the documented fields") {
  HomologyReport r = phi_homology(build_space("sphere:1"), "sphere:1", 3);
  Json j = homology_report_to_json(r);
  CHECK(j["complex"] == "sphere:1");
  CHECK(j["D"] == 3);
  CHECK(j["stable_image_dims"] == Json::array({1, 1}));
  CHECK(j["matches_N"] == true);
  CHECK(j.contains("dims_GD"));
}
