#include <chrono>
#include <fstream>
#include <iostream>
#include <algorithm>

#include "CLI11.hpp"

#include "dechain/io.hpp"
#include "dechain/monoidal.hpp"
#include "dechain/suites.hpp"

using namespace dechain;

namespace {

// Inline JSON if the argument starts with '{', otherwise a path.
Json load_json(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return Json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open '" + arg + "'");
  return Json::parse(in);
}

void emit(const Json& j, const std::string& out) {
  std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write '" + out + "'");
  f << text;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"De Rham chains on finite simplicial sets: homology, pairings, products and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out;
  app.add_option("-o,--output", out, "write the JSON report here instead of stdout");

  std::string space;
  int D = 3;
  bool serial = false;
  auto* homology = app.add_subcommand("homology", "compare H(Phi) through truncations with H(N)");
  homology->add_option("--space", space, "builder expression or file:path")->required();
  homology->add_option("--D", D, "weight bound")->check(CLI::NonNegativeNumber);
  homology->add_flag("--serial", serial, "assemble matrices without OpenMP");

  std::vector<std::string> suites;
  int cases = 0;
  std::uint64_t seed = 1;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run named verification suites");
  verify->add_option("--suite", suites, "suite name or 'all' (repeatable)")->required();
  verify->add_option("--cases", cases, "random cases per check (0 = suite default)")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "random seed");
  verify->add_flag("--timing", timing, "include wall-clock seconds (reports are no longer byte-stable)");

  std::string chain, cochain;
  auto* pair = app.add_subcommand("pair", "evaluate the pairing of a chain with a cochain form");
  pair->add_option("--space", space)->required();
  pair->add_option("--chain", chain, "chain JSON, inline or path")->required();
  pair->add_option("--cochain", cochain, "cochain JSON, inline or path")->required();

  std::string left, right, a, b;
  auto* prod = app.add_subcommand("product", "shuffle product of two chains on X x Y");
  prod->add_option("--left", left, "space X")->required();
  prod->add_option("--right", right, "space Y")->required();
  prod->add_option("--a", a, "chain on X")->required();
  prod->add_option("--b", b, "chain on Y")->required();

  int repeat = 1;
  auto* bench = app.add_subcommand("bench", "time every suite, or serial against parallel assembly for a space");
  bench->add_option("--space", space, "time truncation assembly for this space instead of the suites");
  bench->add_option("--D", D, "weight bound for --space");
  bench->add_option("--repeat", repeat)->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*homology) {
      SSet X = build_space(space);
      HomologyReport r = phi_homology(X, space, D, serial ? Exec::serial : Exec::parallel);
      emit(homology_report_to_json(r), out);
      return r.matches_N ? 0 : 1;
    }
    if (*verify) {
      std::vector<std::string> names;
      for (const auto& s : suites) {
        if (s == "all")
          names.insert(names.end(), suite_names().begin(), suite_names().end());
        else
          names.push_back(s);
      }
      for (const auto& s : names)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
          throw std::invalid_argument("unknown suite '" + s + "'");
      Json reports = Json::array();
      bool ok = true;
      for (const auto& s : names) {
        SuiteReport r = run_suite(s, SuiteOptions{cases, seed});
        ok = ok && r.passed();
        reports.push_back(r.to_json(timing));
      }
      emit(Json{{"passed", ok}, {"suites", reports}}, out);
      return ok ? 0 : 1;
    }
    if (*pair) {
      SSet X = build_space(space);
      PhiChain c = phi_chain_from_json(X, load_json(chain));
      CochainForm w = cochain_from_json(X, load_json(cochain));
      if (auto bad = validate_cochain(X, w))
        throw std::invalid_argument("cochain is not compatible with faces at '" + X.id(bad->simplex) + "'");
      emit(Json{{"value", to_fraction_string(global_pair(X, c, w))}}, out);
      return 0;
    }
    if (*prod) {
      SSet X = build_space(left), Y = build_space(right);
      SSet P = product(X, Y);
      PhiChain r = mu_phi(P, phi_chain_from_json(X, load_json(a)), phi_chain_from_json(Y, load_json(b)));
      emit(phi_chain_to_json(P, r), out);
      return 0;
    }
    if (*bench) {
      Json rows = Json::array();
      if (!space.empty()) {
        SSet X = build_space(space);
        for (Exec e : {Exec::serial, Exec::parallel}) {
          auto t0 = std::chrono::steady_clock::now();
          for (int i = 0; i < repeat; ++i) truncated_complex(X, D, e);
          rows.push_back({{"kernel", "truncated_complex"},
                          {"exec", e == Exec::serial ? "serial" : "parallel"},
                          {"seconds", seconds_since(t0) / repeat}});
        }
      } else {
        for (const auto& s : suite_names()) {
          double total = 0;
          bool ok = true;
          for (int i = 0; i < repeat; ++i) {
            SuiteReport r = run_suite(s, SuiteOptions{0, seed});
            total += r.seconds;
            ok = ok && r.passed();
          }
          rows.push_back({{"suite", s}, {"seconds", total / repeat}, {"passed", ok}});
        }
      }
      emit(Json{{"timings", rows}}, out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
