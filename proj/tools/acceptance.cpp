#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "dechain/suites.hpp"

using namespace dechain;

namespace {

struct Criterion {
  int id;
  std::vector<std::string> suites;
  double bound;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, {"integration"}, 10},  {2, {"delta-squared"}, 30}, {3, {"adjunction"}, 60},
      {4, {"local-homology"}, 60}, {5, {"quasi-iso"}, 300},   {6, {"monoidal"}, 120},
      {7, {"colimit"}, 180},     {8, {"shuffles", "ez"}, 30}, {9, {"injectivity"}, 30}};
  bool all = true;
  for (const auto& c : criteria) {
    double seconds = 0;
    bool ok = true;
    std::vector<std::string> failed;
    std::string label;
    for (const auto& s : c.suites) {
      SuiteReport r = run_suite(s, SuiteOptions{0, 1});
      seconds += r.seconds;
      ok = ok && r.passed();
      label += (label.empty() ? "" : "+") + s;
      for (const auto& check : r.checks)
        if (!check.passed())
          failed.push_back(s + ": " + check.name + " (" + std::to_string(check.failures) + "/" +
                           std::to_string(check.cases) + " failed)");
    }
    bool in_time = seconds < c.bound;
    bool pass = ok && in_time;
    all = all && pass;
    std::printf("criterion %d [%s]: %s  %.2f s (bound %.0f s)%s\n", c.id, label.c_str(), pass ? "PASS" : "FAIL",
                seconds, c.bound, in_time ? "" : "  time bound exceeded");
    for (const auto& f : failed) std::printf("    failing check  %s\n", f.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
