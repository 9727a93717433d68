#include "dechain/suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "dechain/colimit.hpp"
#include "dechain/monoidal.hpp"
#include "dechain/phi_global.hpp"
#include "dechain/random.hpp"

namespace dechain {

bool SuiteReport::passed() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

const CheckResult* SuiteReport::find(const std::string& check) const {
  for (const auto& c : checks)
    if (c.name == check) return &c;
  return nullptr;
}

Json SuiteReport::to_json(bool with_timing) const {
  Json list = Json::array();
  for (const auto& c : checks) {
    Json j = {{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"passed", c.passed()}};
    if (!c.counterexample.is_null()) j["counterexample"] = c.counterexample;
    list.push_back(j);
  }
  Json out = {{"suite", suite}, {"seed", seed}, {"passed", passed()}, {"checks", list}};
  if (with_timing) out["seconds"] = seconds;
  return out;
}

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{
      "delta:0",  "delta:1",  "delta:2",  "delta:3",  "boundary:2", "boundary:3",
      "sphere:1", "sphere:2", "product:(sphere:1,sphere:1)", "product:(delta:1,delta:1)"};
  return names;
}

namespace {

class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }

  template <class W>
  void expect(bool ok, W&& witness) {
    ++r_.cases;
    if (!ok && r_.failures++ == 0) r_.counterexample = witness();
  }
  void fail_with(const std::string& error) {
    ++r_.cases;
    if (r_.failures++ == 0) r_.counterexample = Json{{"error", error}};
  }
  CheckResult take() { return std::move(r_); }

 private:
  CheckResult r_;
};

void run(SuiteReport& rep, const std::string& name, const std::function<void(Check&)>& body) {
  Check c(name);
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail_with(e.what());
  }
  rep.checks.push_back(c.take());
}

int cases_or(const SuiteOptions& o, int fallback) { return o.cases > 0 ? o.cases : fallback; }

int parity(int n) { return n % 2 ? -1 : 1; }

std::string q(const Rational& r) { return to_fraction_string(r); }

Json mono_json(const Monomial& m, int n) { return std::vector<int>(m.e.begin(), m.e.begin() + n + 1); }

RawPoly random_raw(Rng& rng, int n, int maxdeg, int terms) {
  RawPoly p;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(n + 1);
    for (int& v : e) v = uniform_int(rng, 0, maxdeg);
    raw_add_term(p, monomial_of(e), random_rational(rng));
  }
  return p;
}

Json raw_json(const RawPoly& p, int n) {
  Json out = Json::array();
  for (const auto& [m, c] : p) out.push_back({{"coef", q(c)}, {"t", mono_json(m, n)}});
  return out;
}

/// Random surjective map [n] -> [m], not necessarily monotone.
std::vector<int> random_surjective(Rng& rng, int n, int m) { return random_map(rng, n, m, true); }

// ---------------------------------------------------------------- integration

void suite_integration(SuiteReport& rep, const SuiteOptions& o) {
  Rng rng(o.seed);
  int N = cases_or(o, 200);

  run(rep, "integrals of s-monomials", [&](Check& c) {
    for (int n = 0; n <= 3; ++n) {
      std::vector<int> nu(n + 1, 0);
      std::function<void(int, int)> rec = [&](int k, int left) {
        if (k > n) {
          Poly p = Poly::constant(n, 1);
          Rational want = 1;
          int partial = 0;
          for (int j = 1; j <= n; ++j) {
            for (int e = 0; e < nu[j]; ++e) p = p * Poly::s(n, j);
            partial += nu[j] + 1;
            want /= partial;
          }
          Rational got = p.integrate();
          c.expect(got == want, [&] { return Json{{"n", n}, {"nu", nu}, {"got", q(got)}, {"want", q(want)}}; });
          return;
        }
        for (int e = 0; e <= left; ++e) {
          nu[k] = e;
          rec(k + 1, left - e);
        }
      };
      rec(1, 4);
    }
  });

  run(rep, "integral vanishes on (1 - sum t) f", [&](Check& c) {
    for (int trial = 0; trial < N; ++trial) {
      int n = uniform_int(rng, 0, 4);
      RawPoly f = random_raw(rng, n, 3, uniform_int(rng, 1, 3));
      RawPoly rel;
      raw_add_term(rel, Monomial{}, 1);
      for (int i = 0; i <= n; ++i) {
        Monomial m;
        m.e[i] = 1;
        raw_add_term(rel, m, -1);
      }
      Rational got = integrate_raw(n, raw_multiply(rel, f));
      c.expect(sgn(got) == 0, [&] { return Json{{"n", n}, {"f", raw_json(f, n)}, {"integral", q(got)}}; });
    }
  });

  run(rep, "product of integrals as a sum over shuffles", [&](Check& c) {
    for (int trial = 0; trial < N; ++trial) {
      int n = uniform_int(rng, 0, 5);
      int m = uniform_int(rng, 0, 5 - n);
      RawPoly rf = random_raw(rng, n, 2, 2), rg = random_raw(rng, m, 2, 2);
      Poly f = Poly::from_raw(n, rf), g = Poly::from_raw(m, rg);
      Rational lhs = f.integrate() * g.integrate();
      Rational rhs = 0;
      for (const auto& s : enumerate_shuffles({n, m})) rhs += (f.pullback(s[0]) * g.pullback(s[1])).integrate();
      c.expect(lhs == rhs, [&] {
        return Json{{"n", n}, {"m", m}, {"f", raw_json(rf, n)}, {"g", raw_json(rg, m)}, {"lhs", q(lhs)}, {"rhs", q(rhs)}};
      });
    }
  });
}

// ---------------------------------------------------------------- pushforward

void suite_pushforward(SuiteReport& rep, const SuiteOptions& o) {
  Rng rng(o.seed);
  int N = cases_or(o, 200);

  run(rep, "projection formula", [&](Check& c) {
    for (int trial = 0; trial < N; ++trial) {
      int n = uniform_int(rng, 1, 4), m = uniform_int(rng, 0, n);
      auto sigma = random_surjective(rng, n, m);
      Poly f = random_poly(rng, n, 3), g = random_poly(rng, m, 3);
      Rational lhs = (f * g.pullback(sigma)).integrate(), rhs = (f.pushforward(sigma, m) * g).integrate();
      c.expect(lhs == rhs, [&] { return Json{{"sigma", sigma}, {"f", f.str()}, {"g", g.str()}}; });
    }
  });

  run(rep, "pushforward preserves integrals", [&](Check& c) {
    for (int trial = 0; trial < N; ++trial) {
      int n = uniform_int(rng, 0, 4), m = uniform_int(rng, 0, n);
      auto sigma = random_surjective(rng, n, m);
      Poly f = random_poly(rng, n, 4);
      c.expect(f.pushforward(sigma, m).integrate() == f.integrate(),
               [&] { return Json{{"sigma", sigma}, {"f", f.str()}}; });
    }
  });

  run(rep, "pushforward is functorial", [&](Check& c) {
    for (int trial = 0; trial < N; ++trial) {
      int n = uniform_int(rng, 0, 4), m = uniform_int(rng, 0, n), k = uniform_int(rng, 0, m);
      auto sigma = random_surjective(rng, n, m), tau = random_surjective(rng, m, k);
      std::vector<int> ts(n + 1);
      for (int i = 0; i <= n; ++i) ts[i] = tau[sigma[i]];
      Poly f = random_poly(rng, n, 3);
      c.expect(f.pushforward(ts, k) == f.pushforward(sigma, m).pushforward(tau, k),
               [&] { return Json{{"sigma", sigma}, {"tau", tau}, {"f", f.str()}}; });
      ThetaElt a = random_theta(rng, n, uniform_int(rng, 0, std::min(n, 2)), 2);
      c.expect(pushforward(a, ts, k) == pushforward(pushforward(a, sigma, m), tau, k),
               [&] { return Json{{"sigma", sigma}, {"tau", tau}, {"a", a.str()}}; });
    }
  });

  run(rep, "pushforward on Theta is adjoint to pullback of forms", [&](Check& c) {
    for (int trial = 0; trial < N; ++trial) {
      int n = uniform_int(rng, 1, 4), m = uniform_int(rng, 0, n);
      int d = uniform_int(rng, 0, m);
      auto sigma = random_surjective(rng, n, m);
      ThetaElt a = random_theta(rng, n, d, 2);
      FormElt w = random_form(rng, m, d, 2);
      Rational lhs = pair_theta_form(pushforward(a, sigma, m), w).integrate();
      Rational rhs = pair_theta_form(a, pullback(w, sigma)).integrate();
      c.expect(lhs == rhs, [&] { return Json{{"sigma", sigma}, {"a", a.str()}, {"w", w.str()}}; });
    }
  });
}

// ---------------------------------------------------------------- theta

void suite_theta(SuiteReport& rep, const SuiteOptions& o) {
  Rng rng(o.seed);
  int N = cases_or(o, 200);

  run(rep, "theta is the wedge of consecutive differences", [&](Check& c) {
    for (int n = 0; n <= 6; ++n) {
      ThetaElt t = ThetaElt::basis(n, 0);
      for (int i = 1; i <= n; ++i) t = wedge(t, e_difference(n, i, i - 1));
      c.expect(t == theta_top(n), [&] { return Json{{"n", n}, {"got", t.str()}}; });
    }
  });

  run(rep, "interior product is adjoint to wedge", [&](Check& c) {
    for (int n = 1; n <= 4; ++n) {
      Mask full = ((Mask{1} << (n + 1)) - 1) & ~Mask{1};
      for (Mask ma = full;; ma = (ma - 1) & full) {
        for (int j = 1; j <= n; ++j)
          for (Mask mv = full;; mv = (mv - 1) & full) {
            if (popcount(mv) + 1 == popcount(ma)) {
              Poly lhs = pair_theta_form(interior(ds(n, j), ThetaElt::basis(n, ma)), FormElt::basis(n, mv));
              Poly rhs = pair_theta_form(ThetaElt::basis(n, ma), wedge(ds(n, j), FormElt::basis(n, mv)));
              if (popcount(mv) % 2 == 0) rhs *= Rational(-1);
              c.expect(lhs == rhs, [&] { return Json{{"n", n}, {"a", mask_elements(ma)}, {"j", j}, {"v", mask_elements(mv)}}; });
            }
            if (mv == 0) break;
          }
        if (ma == 0) break;
      }
    }
  });

  run(rep, "bullet is compatible with pairing", [&](Check& c) {
    for (int trial = 0; trial < N; ++trial) {
      int n = uniform_int(rng, 1, 4), m = uniform_int(rng, 0, n), d = uniform_int(rng, 0, m);
      OrdMap sigma = random_surjection(rng, n, m);
      ThetaElt a = random_theta(rng, m, d, 2);
      FormElt w = random_form(rng, m, d, 2);
      Poly lhs = pair_theta_form(bullet(sigma, a), pullback(w, sigma));
      Poly rhs = pair_theta_form(a, w).pullback(sigma);
      c.expect(lhs == rhs, [&] { return Json{{"sigma", sigma.values()}, {"a", a.str()}, {"w", w.str()}}; });
    }
  });

  run(rep, "face restriction inverts the face inclusion", [&](Check& c) {
    for (int n = 1; n <= 4; ++n)
      for (int j = 0; j <= n; ++j) {
        std::vector<int> inc;
        for (int i = 0; i <= n; ++i)
          if (i != j) inc.push_back(i);
        Mask full = ((Mask{1} << n) - 1) & ~Mask{1};
        for (Mask m = full;; m = (m - 1) & full) {
          ThetaElt up = ThetaElt::basis(n, 0);
          for (int i : mask_elements(m)) up = wedge(up, e_difference(n, inc[i - 1], inc[i]));
          c.expect(restrict_face(up, j) == ThetaElt::basis(n - 1, m) && interior(dt(n, j), up).is_zero(),
                   [&] { return Json{{"n", n}, {"j", j}, {"w", mask_elements(m)}}; });
          if (m == 0) break;
        }
      }
  });

  run(rep, "de Rham d squares to zero and commutes with pullback", [&](Check& c) {
    for (int trial = 0; trial < N; ++trial) {
      int n = uniform_int(rng, 1, 4), d = uniform_int(rng, 0, n - 1);
      FormElt w = random_form(rng, n, d, 3);
      c.expect(de_rham_d(de_rham_d(w)).is_zero(), [&] { return Json{{"w", w.str()}}; });
      int k = uniform_int(rng, 0, 4);
      auto alpha = random_map(rng, k, n, false);
      c.expect(de_rham_d(pullback(w, alpha)) == pullback(de_rham_d(w), alpha),
               [&] { return Json{{"w", w.str()}, {"alpha", alpha}}; });
    }
  });
}

// ---------------------------------------------------------------- delta-squared

void suite_delta_squared(SuiteReport& rep, const SuiteOptions& o) {
  Rng rng(o.seed);
  int N = cases_or(o, 200);
  std::vector<PhiElt> sample;
  for (int trial = 0; trial < N; ++trial) {
    int n = uniform_int(rng, 0, 3);
    sample.push_back(random_phi(rng, n, uniform_int(rng, 0, n), 4));
  }
  auto each = [&](const std::string& name, const std::function<PhiElt(const PhiElt&)>& f) {
    run(rep, name, [&](Check& c) {
      for (const auto& a : sample) c.expect(f(a).is_zero(), [&] { return Json{{"a", a.str()}}; });
    });
  };
  each("delta' squared", [](const PhiElt& a) { return delta_prime(delta_prime(a)); });
  each("delta'' squared", [](const PhiElt& a) { return delta_dblprime(delta_dblprime(a)); });
  each("delta squared", [](const PhiElt& a) { return delta(delta(a)); });
  each("delta' and delta'' anticommute",
       [](const PhiElt& a) { return delta_prime(delta_dblprime(a)) + delta_dblprime(delta_prime(a)); });
}

// ---------------------------------------------------------------- adjunction

void suite_adjunction(SuiteReport& rep, const SuiteOptions& o) {
  Rng rng(o.seed);
  int N = cases_or(o, 200);

  run(rep, "delta is adjoint to d", [&](Check& c) {
    for (int trial = 0; trial < N; ++trial) {
      int n = uniform_int(rng, 1, 3), d = uniform_int(rng, 0, n - 1);
      PhiElt a = random_phi(rng, n, d + 1, 4);
      FormElt w = random_form(rng, n, d, 3);
      Rational lhs = big_pair(delta(a), w), rhs = parity(d + 1) * big_pair(a, de_rham_d(w));
      c.expect(lhs == rhs, [&] { return Json{{"a", a.str()}, {"w", w.str()}, {"lhs", q(lhs)}, {"rhs", q(rhs)}}; });
    }
  });

  run(rep, "pushforward is adjoint to pullback", [&](Check& c) {
    for (int trial = 0; trial < N; ++trial) {
      int n = uniform_int(rng, 0, 3), m = uniform_int(rng, 0, 3), d = uniform_int(rng, 0, std::min(n, m));
      auto sigma = random_map(rng, n, m, false);
      PhiElt b = random_phi(rng, n, d, 4);
      FormElt v = random_form(rng, m, d, 3);
      Rational lhs = big_pair(push_phi(sigma, m, b), v), rhs = big_pair(b, pullback(v, sigma));
      c.expect(lhs == rhs, [&] { return Json{{"sigma", sigma}, {"b", b.str()}, {"v", v.str()}}; });
    }
  });

  run(rep, "Stokes identity for gradients", [&](Check& c) {
    for (int trial = 0; trial < std::max(1, N / 2); ++trial) {
      int n = uniform_int(rng, 1, 4);
      Poly f = random_poly(rng, n, 4);
      std::vector<Rational> x(n + 1);
      Rational sum = 0;
      for (int i = 0; i < n; ++i) sum += x[i] = random_rational(rng);
      x[n] = -sum;
      Rational total = f.grad(x).integrate();
      for (int i = 0; i <= n; ++i) total += x[i] * f.restrict_face(i).integrate();
      c.expect(sgn(total) == 0, [&] {
        Json xs = Json::array();
        for (const auto& v : x) xs.push_back(q(v));
        return Json{{"f", f.str()}, {"x", xs}, {"total", q(total)}};
      });
    }
  });

  run(rep, "global boundary is adjoint to d on cochains", [&](Check& c) {
    std::vector<SSet> spaces{sphere(1), sphere(2), product(delta(1), delta(1))};
    int per = std::max(1, N / 6);
    for (const auto& X : spaces)
      for (int d = 0; d < std::max(1, X.dim()); ++d) {
        auto basis = cochain_basis(X, d, 2);
        for (int trial = 0; trial < per; ++trial) {
          CochainForm om = random_cochain(rng, basis, d);
          PhiChain ch = random_phi_chain(rng, X, d + 1, 4);
          Rational lhs = global_pair(X, phi_boundary(X, ch), om);
          Rational rhs = parity(d + 1) * global_pair(X, ch, cochain_d(om));
          c.expect(lhs == rhs, [&] { return Json{{"chain", phi_chain_to_json(X, ch)}, {"form", cochain_to_json(X, om)}}; });
        }
      }
  });
}

// ---------------------------------------------------------------- monoidal

int koszul(int a, int b) { return parity(a * b); }

void suite_monoidal(SuiteReport& rep, const SuiteOptions& o) {
  Rng rng(o.seed);
  int N = cases_or(o, 100);

  run(rep, "shuffle sign", [&](Check& c) {
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; n + m <= 4; ++m)
        for (const auto& s : enumerate_shuffles({n, m})) {
          // sign of the permutation listing the first block, then the second
          int inv = 0;
          auto b = s.blocks();
          for (int x : b[0])
            for (int y : b[1]) inv += x > y;
          int want = parity(inv);
          bool ok = shuffle_sign(s) == want && mu_theta(s, theta_top(n), theta_top(m)) == want * theta_top(n + m);
          c.expect(ok, [&] { return Json{{"blocks", b}, {"want", want}}; });
        }
  });

  run(rep, "twist", [&](Check& c) {
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; n + m <= 4; ++m)
        for (const auto& s : enumerate_shuffles({n, m}))
          for (Mask ma = 0; ma < (Mask(1) << n); ++ma)
            for (Mask mb = 0; mb < (Mask(1) << m); ++mb) {
              ThetaElt a = ThetaElt::basis(n, ma << 1), b = ThetaElt::basis(m, mb << 1);
              Shuffle sw({s[1], s[0]});
              c.expect(mu_theta(s, a, b) == koszul(popcount(ma), popcount(mb)) * mu_theta(sw, b, a),
                       [&] { return Json{{"blocks", s.blocks()}, {"a", a.str()}, {"b", b.str()}}; });
            }
  });

  run(rep, "pairing identity", [&](Check& c) {
    for (int trial = 0; trial < N; ++trial) {
      int n = uniform_int(rng, 0, 3), m = uniform_int(rng, 0, 3);
      auto ss = enumerate_shuffles({n, m});
      const Shuffle& s = ss[uniform_int(rng, 0, static_cast<int>(ss.size()) - 1)];
      int p = uniform_int(rng, 0, n), r = uniform_int(rng, 0, m);
      ThetaElt a = random_theta(rng, n, p, 2), b = random_theta(rng, m, r, 2);
      FormElt w = random_form(rng, n, p, 2), v = random_form(rng, m, r, 2);
      Poly lhs = pair_theta_form(mu_theta(s, a, b), mu_form(s, w, v));
      Poly rhs = pair_theta_form(a, w).pullback(s[0]) * pair_theta_form(b, v).pullback(s[1]);
      c.expect(lhs == koszul(r, p) * rhs, [&] {
        return Json{{"blocks", s.blocks()}, {"a", a.str()}, {"b", b.str()}, {"w", w.str()}, {"v", v.str()}};
      });
    }
  });

  std::vector<std::pair<std::string, std::string>> pairs{
      {"delta:1", "delta:1"}, {"sphere:1", "delta:2"}, {"delta:2", "sphere:1"}, {"sphere:1", "sphere:1"}};
  struct Prod {
    SSet X, Y, P;
  };
  std::vector<Prod> prods;
  for (const auto& [a, b] : pairs) {
    SSet X = build_space(a), Y = build_space(b);
    SSet P = product(X, Y);
    prods.push_back({std::move(X), std::move(Y), std::move(P)});
  }

  run(rep, "shuffle product of chains is a chain map", [&](Check& c) {
    for (int trial = 0; trial < N; ++trial) {
      const Prod& pr = prods[trial % prods.size()];
      int n = uniform_int(rng, 0, pr.X.dim()), m = uniform_int(rng, 0, pr.Y.dim());
      Chain x{n, {}}, y{m, {}};
      for (int i = 0; i < pr.X.count(n); ++i) x.add(i, random_rational(rng));
      for (int j = 0; j < pr.Y.count(m); ++j) y.add(j, random_rational(rng));
      Chain lhs = chain_boundary(pr.P, shuffle_product_N(pr.P, x, y));
      Chain rhs{lhs.degree, {}};
      for (const auto& [k, v] : shuffle_product_N(pr.P, chain_boundary(pr.X, x), y).terms) rhs.add(k, v);
      for (const auto& [k, v] : shuffle_product_N(pr.P, x, chain_boundary(pr.Y, y)).terms) rhs.add(k, parity(n) * v);
      c.expect(lhs.terms == rhs.terms, [&] { return Json{{"n", n}, {"m", m}}; });
    }
  });

  run(rep, "phi commutes with products", [&](Check& c) {
    for (const auto& pr : prods)
      for (int n = 0; n <= pr.X.dim(); ++n)
        for (int m = 0; m <= pr.Y.dim(); ++m)
          for (int i = 0; i < pr.X.count(n); ++i)
            for (int j = 0; j < pr.Y.count(m); ++j) {
              Chain x{n, {{i, 1}}}, y{m, {{j, 1}}};
              c.expect(mu_phi(pr.P, phi_of_chain(x), phi_of_chain(y)) == phi_of_chain(shuffle_product_N(pr.P, x, y)),
                       [&] { return Json{{"x", pr.X.id({n, i})}, {"y", pr.Y.id({m, j})}}; });
            }
    for (int trial = 0; trial < N; ++trial) {
      const Prod& pr = prods[trial % prods.size()];
      int n = uniform_int(rng, 0, pr.X.dim()), m = uniform_int(rng, 0, pr.Y.dim());
      Chain x{n, {}}, y{m, {}};
      for (int i = 0; i < pr.X.count(n); ++i) x.add(i, random_rational(rng));
      for (int j = 0; j < pr.Y.count(m); ++j) y.add(j, random_rational(rng));
      c.expect(mu_phi(pr.P, phi_of_chain(x), phi_of_chain(y)) == phi_of_chain(shuffle_product_N(pr.P, x, y)),
               [&] { return Json{{"n", n}, {"m", m}}; });
    }
  });

  run(rep, "Leibniz rule", [&](Check& c) {
    for (int trial = 0; trial < N; ++trial) {
      const Prod& pr = prods[trial % prods.size()];
      int p = uniform_int(rng, 0, 2), r = uniform_int(rng, 0, 2);
      PhiChain a = random_phi_chain(rng, pr.X, p, 3, 2), b = random_phi_chain(rng, pr.Y, r, 3, 2);
      PhiChain lhs = phi_boundary(pr.P, mu_phi(pr.P, a, b));
      PhiChain rhs = mu_phi(pr.P, phi_boundary(pr.X, a), b) +
                     Rational(parity(p)) * mu_phi(pr.P, a, phi_boundary(pr.Y, b));
      c.expect(lhs == rhs, [&] { return Json{{"a", phi_chain_to_json(pr.X, a)}, {"b", phi_chain_to_json(pr.Y, b)}}; });
    }
  });

  run(rep, "product is adjoint to the product of forms", [&](Check& c) {
    for (int trial = 0; trial < N; ++trial) {
      const Prod& pr = prods[trial % prods.size()];
      int p = uniform_int(rng, 0, std::min(pr.X.dim(), 1)), r = uniform_int(rng, 0, std::min(pr.Y.dim(), 1));
      CochainForm w = random_cochain(rng, cochain_basis(pr.X, p, 2), p);
      CochainForm v = random_cochain(rng, cochain_basis(pr.Y, r, 2), r);
      PhiChain a = random_phi_chain(rng, pr.X, p, 3), b = random_phi_chain(rng, pr.Y, r, 3);
      CochainForm wv = omega_wedge(pr.P, w, v);
      Rational lhs = global_pair(pr.P, mu_phi(pr.P, a, b), wv);
      Rational rhs = koszul(r, p) * global_pair(pr.X, a, w) * global_pair(pr.Y, b, v);
      c.expect(lhs == rhs && !validate_cochain(pr.P, wv), [&] {
        return Json{{"a", phi_chain_to_json(pr.X, a)}, {"b", phi_chain_to_json(pr.Y, b)}, {"lhs", q(lhs)}, {"rhs", q(rhs)}};
      });
    }
  });

  run(rep, "graded symmetry and associativity", [&](Check& c) {
    SSet d1 = delta(1);
    SSet P = product(d1, d1), Q = product(d1, d1);
    SSet L = product(P, d1), R = product(d1, Q);
    for (int trial = 0; trial < N; ++trial) {
      int p = uniform_int(rng, 0, 1), r = uniform_int(rng, 0, 1), s = uniform_int(rng, 0, 1);
      PhiChain a = random_phi_chain(rng, d1, p, 2, 2), b = random_phi_chain(rng, d1, r, 2, 2),
               e = random_phi_chain(rng, d1, s, 2, 2);
      c.expect(swap_factors(P, Q, mu_phi(P, a, b)) == Rational(koszul(p, r)) * mu_phi(Q, b, a),
               [&] { return Json{{"a", phi_chain_to_json(d1, a)}, {"b", phi_chain_to_json(d1, b)}}; });
      c.expect(leaf_chain(L, mu_phi(L, mu_phi(P, a, b), e)) == leaf_chain(R, mu_phi(R, a, mu_phi(Q, b, e))), [&] {
        return Json{{"a", phi_chain_to_json(d1, a)}, {"b", phi_chain_to_json(d1, b)}, {"c", phi_chain_to_json(d1, e)}};
      });
    }
  });
}

// ---------------------------------------------------------------- colimit

OrdMap step(int d, int jump) {
  std::vector<int> v(d + 1);
  for (int i = 0; i <= d; ++i) v[i] = i >= jump ? 1 : 0;
  return OrdMap(1, v);
}

UElt random_uelt(Rng& rng, const SSet& X, int m, int k, int terms) {
  std::set<int> pool;
  while (static_cast<int>(pool.size()) < m) pool.insert(uniform_int(rng, 0, 9));
  UElt u(std::vector<int>(pool.begin(), pool.end()), k - m);
  auto all = smash_simplices(X, m, k);
  if (all.empty()) return u;
  for (int t = 0; t < terms; ++t) u.add(all[uniform_int(rng, 0, static_cast<int>(all.size()) - 1)], random_rational(rng));
  return u;
}

Json uelt_json(const SSet& X, const UElt& u) {
  Json terms = Json::array();
  for (const auto& [s, c] : u.terms())
    terms.push_back({{"jumps", s.f}, {"surj", s.x.surj.values()}, {"simplex", X.id(s.x.base)}, {"coef", q(c)}});
  return {{"labels", u.labels()}, {"degree", u.degree()}, {"terms", terms}};
}

/// Both sides of the face identity for z, up to the overall sign under test.
void face_identity(Check& c, int sign_offset) {
  for (int d = 1; d <= 3; ++d)
    for (int m = 1; m <= 2; ++m) {
      std::vector<int> f(m, 0);
      while (true) {
        std::vector<OrdMap> alpha;
        for (int v : f) alpha.push_back(step(d, v));
        ThetaElt z = z_of(alpha);
        for (int i = 0; i <= d; ++i) {
          std::vector<OrdMap> face;
          for (const auto& a : alpha) face.push_back(compose(a, OrdMap::coface(d, i)));
          ThetaElt lhs = Rational(parity(i)) * z_of(face);
          ThetaElt rhs = Rational(parity(m + sign_offset)) * restrict_face(interior(dt(d, i), z), i);
          c.expect(lhs == rhs, [&] {
            return Json{{"d", d}, {"jumps", f}, {"i", i}, {"lhs", lhs.str()}, {"rhs", rhs.str()}};
          });
        }
        int p = 0;
        while (p < m && f[p] == d + 1) f[p++] = 0;
        if (p == m) break;
        ++f[p];
      }
    }
}

void suite_colimit(SuiteReport& rep, const SuiteOptions& o) {
  Rng rng(o.seed);
  int N = cases_or(o, 100);

  run(rep, "psi zeta' is the identity on split generators of weight <= 3", [&](Check& c) {
    for (const auto& name : corpus_names()) {
      SSet X = build_space(name);
      GlobalTruncation g = truncated_complex(X, 3);
      for (int k = 0; k < static_cast<int>(g.basis.size()); ++k)
        for (int j = 0; j < static_cast<int>(g.basis[k].size()); ++j) {
          PhiChain e = g.element(k, {{j, Rational(1)}});
          c.expect(psi(X, zeta_prime(X, e)) == e, [&] { return Json{{"space", name}, {"generator", phi_chain_to_json(X, e)}}; });
        }
    }
  });

  std::vector<std::pair<std::string, SSet>> small;
  for (const char* s : {"delta:1", "sphere:1", "delta:2", "sphere:2"}) small.emplace_back(s, build_space(s));

  run(rep, "zeta' psi is the identity on random classes", [&](Check& c) {
    for (int trial = 0; trial < N; ++trial) {
      const auto& [name, X] = small[trial % small.size()];
      int d = uniform_int(rng, 0, X.dim());
      StabClass s{d, {}};
      for (int r = 0, reps = uniform_int(rng, 1, 2); r < reps; ++r) {
        int m = uniform_int(rng, 0, 2);
        s.reps.push_back(random_uelt(rng, X, m, d + m, 2));
      }
      StabClass back = zeta_prime(X, psi(X, s));
      c.expect(equal_in_colimit(X, back, s), [&] {
        Json reps = Json::array();
        for (const auto& u : s.reps) reps.push_back(uelt_json(X, u));
        return Json{{"space", name}, {"class", reps}};
      });
    }
  });

  run(rep, "factor relation for zeta", [&](Check& c) {
    for (int trial = 0; trial < N; ++trial) {
      const auto& [name, X] = small[trial % small.size()];
      SimplexRef x{uniform_int(rng, 0, X.dim()), 0};
      x.index = uniform_int(rng, 0, X.count(x.dim) - 1);
      std::vector<int> nu_(x.dim + 1);
      for (int& v : nu_) v = uniform_int(rng, 0, 2);
      Mask J = random_wedge_mask(rng, x.dim, uniform_int(rng, 0, x.dim));
      // sum_i (nu_i + 1) zeta(nu + e_i) = zeta(nu), compared in U(A u {inf}) at chain level
      UElt base = zeta1(X, x, nu_, J);
      const int inf = 1000;
      std::vector<int> target = base.labels();
      target.push_back(inf);
      std::map<int, int> incl;
      for (int a : base.labels()) incl[a] = a;
      UElt lhs = lambda_star(X, base, incl, target);
      UElt rhs(target, base.degree());
      std::vector<int> sigma;
      for (int i = 0; i <= x.dim; ++i) sigma.insert(sigma.end(), nu_[i] + 1, i);
      int d = static_cast<int>(sigma.size()) - 1;
      for (int k = 1; k <= d + 1; ++k) {
        std::vector<int> nk(x.dim + 1, -1);
        for (int i = 0; i <= d + 1; ++i) ++nk[sigma[i < k ? i : i - 1]];
        UElt term = zeta1(X, x, nk, J);
        std::map<int, int> g;
        for (int a : term.labels()) g[a] = a == k ? inf : (a < k ? a : a - 1);
        rhs += relabel(term, g);
      }
      c.expect(lhs == rhs, [&] { return Json{{"space", name}, {"simplex", X.id(x)}, {"nu", nu_}, {"J", mask_elements(J)}}; });
    }
  });

  run(rep, "face identity for z with sign (-1)^(m+1), as stated", [&](Check& c) { face_identity(c, 1); });
  run(rep, "face identity for z with sign (-1)^m", [&](Check& c) { face_identity(c, 0); });

  run(rep, "phi sharp is a chain map", [&](Check& c) {
    for (int trial = 0; trial < N; ++trial) {
      const auto& [name, X] = small[trial % small.size()];
      int m = uniform_int(rng, 0, 2), k = uniform_int(rng, 1, 3);
      UElt u = random_uelt(rng, X, m, k, 3);
      c.expect(phi_sharp(X, smash_boundary(X, u)) == phi_boundary(X, phi_sharp(X, u)),
               [&] { return Json{{"space", name}, {"u", uelt_json(X, u)}}; });
    }
  });

  run(rep, "nu is compatible with mu", [&](Check& c) {
    std::vector<std::pair<SSet, SSet>> pairs{{delta(1), delta(1)}, {sphere(1), delta(0)}, {delta(1), sphere(1)}};
    std::vector<SSet> P;
    for (const auto& [X, Y] : pairs) P.push_back(product(X, Y));
    for (int trial = 0; trial < N; ++trial) {
      std::size_t t = trial % pairs.size();
      const auto& [X, Y] = pairs[t];
      int m = uniform_int(rng, 0, 2), n = uniform_int(rng, 0, 1);
      UElt u = random_uelt(rng, X, m, uniform_int(rng, m, m + 1), 2);
      UElt v = random_uelt(rng, Y, n, uniform_int(rng, n, n + 1), 2);
      std::map<int, int> shift;
      for (int b : v.labels()) shift[b] = b + 10;
      v = relabel(v, shift);
      UElt w = nu(P[t], u, v);
      c.expect(phi_sharp(P[t], w) == mu_phi(P[t], phi_sharp(X, u), phi_sharp(Y, v)),
               [&] { return Json{{"u", uelt_json(X, u)}, {"v", uelt_json(Y, v)}}; });
    }
  });
}

// ---------------------------------------------------------------- ez

std::vector<int> expected_homology(const std::string& name) {
  static const std::map<std::string, std::vector<int>> table{
      {"delta:0", {1}},          {"delta:1", {1, 0}},       {"delta:2", {1, 0, 0}},
      {"delta:3", {1, 0, 0, 0}}, {"boundary:2", {1, 1}},    {"boundary:3", {1, 0, 1}},
      {"sphere:1", {1, 1}},      {"sphere:2", {1, 0, 1}},   {"product:(sphere:1,sphere:1)", {1, 2, 1}},
      {"product:(delta:1,delta:1)", {1, 0, 0}}};
  return table.at(name);
}

void suite_ez(SuiteReport& rep, const SuiteOptions& o) {
  Rng rng(o.seed);
  int N = cases_or(o, 200);
  std::vector<std::pair<std::string, SSet>> spaces;
  for (const auto& name : corpus_names()) spaces.emplace_back(name, build_space(name));

  run(rep, "EZ normal form is unique", [&](Check& c) {
    for (const auto& [name, X] : spaces)
      for (const auto& s : X.all_simplices())
        for (int n = s.dim; n <= s.dim + 2; ++n) {
          std::vector<int> v(n + 1);
          std::function<void(int, int)> rec = [&](int i, int cur) {
            if (i > n) {
              if (cur != s.dim) return;
              OrdMap a(s.dim, v);
              c.expect(X.apply_map(a, s) == DegSimplex{a, s},
                       [&] { return Json{{"space", name}, {"simplex", X.id(s)}, {"surj", v}}; });
              return;
            }
            for (int t = i == 0 ? 0 : cur; t <= std::min(i == 0 ? 0 : cur + 1, s.dim); ++t) {
              v[i] = t;
              rec(i + 1, t);
            }
          };
          rec(0, 0);
        }
  });

  run(rep, "face tables satisfy the simplicial identities", [&](Check& c) {
    for (const auto& [name, X] : spaces) {
      std::string err;
      try {
        X.validate();
      } catch (const std::exception& e) {
        err = e.what();
      }
      c.expect(err.empty(), [&] { return Json{{"space", name}, {"error", err}}; });
    }
  });

  run(rep, "apply_map is contravariantly functorial", [&](Check& c) {
    auto rmap = [&](int n, int m) {
      std::vector<int> v = random_map(rng, n, m, false);
      std::sort(v.begin(), v.end());
      return OrdMap(m, v);
    };
    for (int trial = 0; trial < N; ++trial) {
      const auto& [name, X] = spaces[trial % spaces.size()];
      auto all = X.all_simplices();
      SimplexRef s = all[uniform_int(rng, 0, static_cast<int>(all.size()) - 1)];
      OrdMap a = rmap(uniform_int(rng, 0, 3), s.dim);
      OrdMap b = rmap(uniform_int(rng, 0, 3), a.dom());
      c.expect(X.apply_map(b, X.apply_map(a, s)) == X.apply_map(compose(a, b), s), [&] {
        return Json{{"space", name}, {"simplex", X.id(s)}, {"alpha", a.values()}, {"beta", b.values()}};
      });
    }
  });

  run(rep, "normalized chains have the expected homology", [&](Check& c) {
    for (const auto& [name, X] : spaces) {
      ChainComplexQ ch = normalized_chains(X);
      check_complex(ch);
      auto h = homology_dims(ch);
      auto want = expected_homology(name);
      c.expect(h == want, [&] { return Json{{"space", name}, {"got", h}, {"want", want}}; });
    }
  });
}

// ---------------------------------------------------------------- shuffles

mpz_class factorial(int n) {
  mpz_class r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

void suite_shuffles(SuiteReport& rep, const SuiteOptions&) {
  run(rep, "shuffle counts are binomial", [&](Check& c) {
    for (int n = 0; n <= 8; ++n)
      for (int m = 0; n + m <= 8; ++m) {
        auto all = enumerate_shuffles({n, m});
        std::set<Shuffle> distinct(all.begin(), all.end());
        mpz_class want = factorial(n + m) / (factorial(n) * factorial(m));
        c.expect(distinct.size() == all.size() && mpz_class(static_cast<unsigned long>(all.size())) == want,
                 [&] { return Json{{"n", n}, {"m", m}, {"count", all.size()}, {"want", want.get_str()}}; });
      }
  });

  run(rep, "three-part shuffle counts are multinomial", [&](Check& c) {
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; m + n <= 4; ++n)
        for (int p = 0; m + n + p <= 4; ++p) {
          mpz_class want = factorial(m + n + p) / (factorial(m) * factorial(n) * factorial(p));
          auto all = enumerate_shuffles({m, n, p});
          c.expect(mpz_class(static_cast<unsigned long>(all.size())) == want,
                   [&] { return Json{{"sizes", {m, n, p}}, {"count", all.size()}}; });
        }
  });

  auto bijective = [](Check& c, bool left) {
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; m + n <= 6; ++n)
        for (int p = 0; m + n + p <= 6; ++p) {
          std::set<Shuffle> image;
          std::size_t pairs = 0;
          auto outer = left ? enumerate_shuffles({m + n, p}) : enumerate_shuffles({m, n + p});
          auto inner = left ? enumerate_shuffles({m, n}) : enumerate_shuffles({n, p});
          for (const auto& s : outer)
            for (const auto& t : inner) {
              image.insert(left ? operad_L(s, t) : operad_R(s, t));
              ++pairs;
            }
          auto all = enumerate_shuffles({m, n, p});
          std::set<Shuffle> target(all.begin(), all.end());
          bool ok = image == target && pairs == target.size();
          for (const auto& x : all) {
            auto inv = left ? operad_L_inverse(x) : operad_R_inverse(x);
            ok = ok && (left ? operad_L(inv.outer, inv.inner) : operad_R(inv.outer, inv.inner)) == x;
          }
          c.expect(ok, [&] { return Json{{"sizes", {m, n, p}}, {"pairs", pairs}, {"image", image.size()}, {"target", target.size()}}; });
        }
  };
  run(rep, "left operad composition is bijective", [&](Check& c) { bijective(c, true); });
  run(rep, "right operad composition is bijective", [&](Check& c) { bijective(c, false); });
}

// ---------------------------------------------------------------- local homology

void suite_local_homology(SuiteReport& rep, const SuiteOptions&) {
  std::map<std::pair<int, int>, LocalTruncation> cache;
  auto trunc = [&](int n, int D) -> const LocalTruncation& {
    auto key = std::make_pair(n, D);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, local_truncated_complex(n, D)).first;
    return it->second;
  };
  const int D = 3;

  run(rep, "stable local homology is Q in degree 0", [&](Check& c) {
    for (int n = 0; n <= 3; ++n)
      for (int e = D; e <= D + 1; ++e) {
        const auto& small = trunc(n, e);
        const auto& big = trunc(n, e + 2);
        check_complex(small.complex);
        check_complex(big.complex);
        auto im = stable_image_dims(small.complex, small.basis, big.complex, big.basis);
        std::vector<int> want(im.size(), 0);
        if (!want.empty()) want[0] = 1;
        c.expect(im == want, [&] { return Json{{"n", n}, {"D", e}, {"image", im}}; });
      }
  });

  run(rep, "vertex classes are homologous", [&](Check& c) {
    for (int n = 1; n <= 3; ++n) {
      const auto& t = trunc(n, D);
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          PhiElt a = PhiElt::inject(n, Mask{1} << j, ThetaElt::basis(0, 0)) -
                     PhiElt::inject(n, Mask{1} << i, ThetaElt::basis(0, 0));
          c.expect(is_boundary(t.complex, 0, t.coordinates(a)), [&] { return Json{{"n", n}, {"i", i}, {"j", j}}; });
        }
    }
  });
}

// ---------------------------------------------------------------- quasi-iso

int quasi_iso_D(const SSet& X) { return std::max(2, X.dim()); }

void suite_quasi_iso(SuiteReport& rep, const SuiteOptions&) {
  run(rep, "phi is a quasi-isomorphism on the corpus", [&](Check& c) {
    for (const auto& name : corpus_names()) {
      SSet X = build_space(name);
      HomologyReport r = phi_homology(X, name, quasi_iso_D(X));
      std::vector<int> want = expected_homology(name);
      bool ok = r.matches_N && r.homology_N == want;
      c.expect(ok, [&] { return homology_report_to_json(r); });
    }
  });
}

// ---------------------------------------------------------------- injectivity

void suite_injectivity(SuiteReport& rep, const SuiteOptions& o) {
  Rng rng(o.seed);
  int N = cases_or(o, 100);
  run(rep, "xi witness pairs nontrivially", [&](Check& c) {
    int done = 0;
    while (done < N) {
      int n = uniform_int(rng, 0, 3);
      PhiElt a = random_phi(rng, n, uniform_int(rng, 0, n), 4);
      if (a.is_zero()) continue;
      ++done;
      Rational v = big_pair(a, xi_witness(a));
      c.expect(sgn(v) != 0, [&] { return Json{{"a", a.str()}}; });
    }
  });
}

using SuiteFn = void (*)(SuiteReport&, const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"integration", suite_integration},       {"adjunction", suite_adjunction},
      {"pushforward", suite_pushforward},       {"delta-squared", suite_delta_squared},
      {"theta", suite_theta},                   {"monoidal", suite_monoidal},
      {"colimit", suite_colimit},               {"ez", suite_ez},
      {"shuffles", suite_shuffles},             {"local-homology", suite_local_homology},
      {"quasi-iso", suite_quasi_iso},           {"injectivity", suite_injectivity}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteReport rep;
    rep.suite = name;
    rep.seed = opts.seed;
    auto t0 = std::chrono::steady_clock::now();
    fn(rep, opts);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace dechain
