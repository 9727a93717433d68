// Serial reference kernels against their OpenMP versions: timings and a result comparison.
#include <chrono>
#include <cstdio>
#include <string>

#include "dechain/io.hpp"
#include "dechain/phi_local.hpp"

using namespace dechain;

namespace {

template <class F>
double time_of(F&& f, int repeat) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < repeat; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / repeat;
}

bool same(const ChainComplexQ& a, const ChainComplexQ& b) {
  if (a.dims != b.dims) return false;
  for (std::size_t k = 0; k < a.d.size(); ++k)
    if (a.d[k].dense() != b.d[k].dense()) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int repeat = argc > 1 ? std::stoi(argv[1]) : 3;
  bool ok = true;
  std::printf("%-36s %10s %10s %8s  %s\n", "kernel", "serial s", "parallel s", "speedup", "equal");
  auto row = [&](const std::string& name, double s, double p, bool eq) {
    ok = ok && eq;
    std::printf("%-36s %10.4f %10.4f %8.2f  %s\n", name.c_str(), s, p, p > 0 ? s / p : 0.0, eq ? "yes" : "NO");
  };
  for (auto [expr, D] : {std::pair<const char*, int>{"product:(sphere:1,sphere:1)", 4}, {"delta:3", 4}, {"sphere:2", 5}}) {
    SSet X = build_space(expr);
    GlobalTruncation a, b;
    double s = time_of([&] { a = truncated_complex(X, D, Exec::serial); }, repeat);
    double p = time_of([&] { b = truncated_complex(X, D, Exec::parallel); }, repeat);
    row(std::string("G_") + std::to_string(D) + " " + expr, s, p, same(a.complex, b.complex));
  }
  for (int n : {3, 4}) {
    LocalTruncation a, b;
    double s = time_of([&] { a = local_truncated_complex(n, 4, Exec::serial); }, repeat);
    double p = time_of([&] { b = local_truncated_complex(n, 4, Exec::parallel); }, repeat);
    row("local n=" + std::to_string(n) + " D=4", s, p, same(a.complex, b.complex));
  }
  return ok ? 0 : 1;
}
