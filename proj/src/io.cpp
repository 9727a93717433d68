#include "dechain/io.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace dechain {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("parse_rational: not a rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto integer = [](const std::string& t) {
    std::size_t i = (t.size() > 1 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!integer(num) || !integer(den) || den[0] == '-' || den[0] == '+') throw bad();
  Rational q(mpz_class(num[0] == '+' ? num.substr(1) : num), mpz_class(den));
  if (q.get_den() == 0) throw bad();
  q.canonicalize();
  return q;
}

Json sset_to_json(const SSet& X) {
  Json simplices = Json::object();
  for (int d = 0; d <= X.dim(); ++d) {
    Json list = Json::array();
    for (const auto& x : X.simplices(d)) {
      Json faces = Json::array();
      for (int i = 0; i <= d && d > 0; ++i) {
        const DegSimplex& f = X.face(x, i);
        faces.push_back({{"surj", f.surj.values()}, {"base", X.id(f.base)}});
      }
      list.push_back({{"id", X.id(x)}, {"faces", faces}});
    }
    simplices[std::to_string(d)] = list;
  }
  return {{"dims", X.dim()}, {"simplices", simplices}};
}

SSet sset_from_json(const Json& j) {
  try {
    int top = j.at("dims").get<int>();
    const Json& simplices = j.at("simplices");
    SSet X;
    for (int d = 0; d <= top; ++d) {
      auto it = simplices.find(std::to_string(d));
      if (it == simplices.end()) continue;
      for (const Json& s : *it) {
        std::vector<DegSimplex> faces;
        for (const Json& f : s.at("faces")) {
          auto surj = f.at("surj").get<std::vector<int>>();
          if (static_cast<int>(surj.size()) != d) throw std::invalid_argument("face of wrong dimension");
          int cod = surj.empty() ? 0 : surj.back();
          auto base = X.find(cod, f.at("base").get<std::string>());
          if (!base) throw std::invalid_argument("dangling face reference '" + f.at("base").get<std::string>() + "'");
          OrdMap a(cod, std::move(surj));
          if (!a.is_surjective()) throw std::invalid_argument("face map is not surjective");
          faces.push_back({a, *base});
        }
        if (static_cast<int>(faces.size()) != (d > 0 ? d + 1 : 0))
          throw std::invalid_argument("wrong number of faces");
        X.add_simplex(d, s.at("id").get<std::string>(), std::move(faces));
      }
    }
    X.validate();
    return X;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed simplicial set JSON: ") + e.what());
  }
}

namespace {

class SpaceParser {
 public:
  explicit SpaceParser(std::string_view s) : s_(s) {}

  SSet parse() {
    SSet x = expr();
    if (pos_ != s_.size()) fail("trailing input");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("space expression '" + std::string(s_) + "': " + what + " at offset " +
                                std::to_string(pos_));
  }
  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string name() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }
  int number() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a nonnegative integer");
    return std::stoi(std::string(s_.substr(b, pos_ - b)));
  }

  SSet expr() {
    std::string head = name();
    expect(':');
    if (head == "delta") return delta(number());
    if (head == "boundary") return boundary_delta(number());
    if (head == "sphere") return sphere(number());
    if (head == "file") return from_file();
    if (head == "product" || head == "quotient") {
      expect('(');
      SSet a = expr();
      expect(',');
      SSet b = expr();
      expect(')');
      return head == "product" ? product(a, b) : quotient_by_ids(a, b);
    }
    if (head == "skeleton") {
      expect('(');
      SSet a = expr();
      expect(',');
      int k = number();
      expect(')');
      return skeleton(a, k);
    }
    fail("unknown builder '" + head + "'");
  }

  SSet from_file() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')') ++pos_;
    std::string path(s_.substr(b, pos_ - b));
    std::ifstream in(path);
    if (!in) fail("cannot open '" + path + "'");
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      fail("bad JSON in '" + path + "': " + e.what());
    }
    return sset_from_json(j);
  }

  SSet quotient_by_ids(const SSet& a, const SSet& sub) {
    std::vector<SimplexRef> refs;
    for (const auto& s : sub.all_simplices()) {
      auto r = a.find(s.dim, sub.id(s));
      if (!r) fail("subcomplex simplex '" + sub.id(s) + "' not found in the ambient space");
      refs.push_back(*r);
    }
    return quotient(a, refs);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Json poly_terms(const Poly& f) {
  Json out = Json::array();
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> e(m.e.begin(), m.e.begin() + f.n() + 1);
    out.push_back({{"coef", to_fraction_string(c)}, {"t", e}});
  }
  return out;
}

template <class Tag>
Json wedge_to_json(const WedgeElt<Tag>& a, const char* key) {
  Json out = Json::array();
  for (const auto& [mask, f] : a.terms())
    for (Json term : poly_terms(f)) {
      term[key] = mask_elements(mask);
      out.push_back(term);
    }
  return out;
}

template <class Tag>
WedgeElt<Tag> wedge_from_json(int n, int degree, const Json& terms, const char* key) {
  WedgeElt<Tag> out(n, degree);
  for (const Json& t : terms) {
    auto e = t.at("t").get<std::vector<int>>();
    if (static_cast<int>(e.size()) != n + 1) throw std::invalid_argument("exponent vector has the wrong length");
    for (int v : e)
      if (v < 0 || v > 255) throw std::invalid_argument("exponent out of range");
    auto idx = t.at(key).get<std::vector<int>>();
    for (int i : idx)
      if (i < 1 || i > n) throw std::invalid_argument("wedge index out of range");
    Mask mask = mask_of(idx);
    if (popcount(mask) != static_cast<int>(idx.size())) throw std::invalid_argument("repeated wedge index");
    // the stored order may differ from the increasing one
    int sign = 1;
    for (std::size_t p = 0; p < idx.size(); ++p)
      for (std::size_t q = p + 1; q < idx.size(); ++q)
        if (idx[p] > idx[q]) sign = -sign;
    RawPoly r;
    raw_add_term(r, monomial_of(e), sign * parse_rational(t.at("coef").get<std::string>()));
    out.add(mask, Poly::from_raw(n, r));
  }
  return out;
}

SimplexRef lookup(const SSet& X, const Json& t) {
  int dim = t.at("dim").get<int>();
  std::string id = t.at("simplex").get<std::string>();
  auto r = X.find(dim, id);
  if (!r) throw std::invalid_argument("unknown simplex '" + id + "' in dimension " + std::to_string(dim));
  return *r;
}

}  // namespace

SSet build_space(std::string_view expr) { return SpaceParser(expr).parse(); }

Json phi_chain_to_json(const SSet& X, const PhiChain& c) {
  Json terms = Json::array();
  for (const auto& [x, a] : c.terms())
    terms.push_back({{"simplex", X.id(x)}, {"dim", x.dim}, {"theta", wedge_to_json(a, "w")}});
  return {{"degree", c.degree()}, {"terms", terms}};
}

PhiChain phi_chain_from_json(const SSet& X, const Json& j) {
  try {
    PhiChain c(j.at("degree").get<int>());
    for (const Json& t : j.at("terms")) {
      SimplexRef x = lookup(X, t);
      c.add(x, wedge_from_json<ThetaTag>(x.dim, c.degree(), t.at("theta"), "w"));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed chain JSON: ") + e.what());
  }
}

Json cochain_to_json(const SSet& X, const CochainForm& w) {
  Json values = Json::array();
  for (const auto& [x, v] : w.values)
    values.push_back({{"simplex", X.id(x)}, {"dim", x.dim}, {"form", wedge_to_json(v, "ds")}});
  return {{"degree", w.degree}, {"values", values}};
}

CochainForm cochain_from_json(const SSet& X, const Json& j) {
  try {
    CochainForm w;
    w.degree = j.at("degree").get<int>();
    for (const Json& t : j.at("values")) {
      SimplexRef x = lookup(X, t);
      FormElt v = wedge_from_json<FormTag>(x.dim, w.degree, t.at("form"), "ds");
      auto [it, fresh] = w.values.emplace(x, v);
      if (!fresh) it->second += v;
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed cochain JSON: ") + e.what());
  }
}

Json homology_report_to_json(const HomologyReport& r) {
  Json j = {{"complex", r.complex},
            {"D", r.D},
            {"dims_GD", r.dims_GD},
            {"stable_image_dims", r.stable_image_dims},
            {"matches_N", r.matches_N},
            {"homology_N", r.homology_N},
            {"stable_image_dims_next", r.stable_image_dims_next},
            {"phi_image_dims", r.phi_image_dims}};
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j;
}

}  // namespace dechain
