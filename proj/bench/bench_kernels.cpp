// Serial vs parallel timings for the three OpenMP kernels.

#include <chrono>
#include <cstdio>
#include <functional>

#include "iet/extension.hpp"
#include "iet/language.hpp"
#include "iet/rauzy.hpp"

using namespace iet;

namespace {

double seconds(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, const std::function<void()>& serial, const std::function<void()>& parallel) {
  const double s = seconds(serial), p = seconds(parallel);
  std::printf("%-22s serial %8.3fs  parallel %8.3fs  speedup %5.2fx\n", name, s, p, p > 0 ? s / p : 0.0);
}

}  // namespace

int main() {
  const QuadraticNumber alpha = QuadraticNumber::parse("3/2-1/2*sqrt(5)");
  const Iet r = make_iet({{'a', 1 - alpha}, {'b', alpha}}, "ab", "ba");
  row("language_of_iet(64)", [&] { language_of_iet_serial(r, 64); }, [&] { language_of_iet(r, 64); });
  const FactorialLanguage tri = substitution_language(Substitution::tribonacci(), 'a', 42);
  row("tree check (40)", [&] { check_planar_tree_set_serial(tri, std::nullopt, 40); },
      [&] { check_planar_tree_set(tri, std::nullopt, 40); });
  row("rauzy_cloud(1e6)", [] { rauzy::rauzy_cloud_serial(1000000); }, [] { rauzy::rauzy_cloud(1000000); });
}
