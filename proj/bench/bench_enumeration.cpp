// Reference vs serial vs parallel support enumeration, and serial vs
// parallel property verification. Results must agree; times are reported.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>

#include "eqc/equilibria.hpp"
#include "eqc/scenarios.hpp"
#include "eqc/search.hpp"

using namespace eqc;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

BimatrixGame random_game(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-100, 100);
  Matrix a(n, n), b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng), b(i, j) = d(rng);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return BimatrixGame("bench", labels, labels, a, b);
}

bool same(const std::vector<Equilibrium>& x, const std::vector<Equilibrium>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].same_profile(y[i])) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n\n", omp_get_max_threads());
  std::printf("%-22s %12s %12s %12s %9s %6s\n", "game", "reference", "serial", "parallel", "speedup", "agree");

  auto row = [&](const char* name, const BimatrixGame& g, bool with_reference) {
    std::vector<Equilibrium> ref, ser, par;
    const double tr = with_reference ? seconds([&] { ref = support_enumeration_reference(g); }, reps) : 0;
    const double ts = seconds([&] { ser = support_enumeration(g, Execution::Serial); }, reps);
    const double tp = seconds([&] { par = support_enumeration(g, Execution::Parallel); }, reps);
    const bool agree = same(ser, par) && (!with_reference || same(ref, ser));
    char reference[32] = "-";
    if (with_reference) std::snprintf(reference, sizeof reference, "%.4fs", tr);
    std::printf("%-22s %12s %11.4fs %11.4fs %8.2fx %6s\n", name, reference, ts, tp, ts / tp, agree ? "yes" : "NO");
  };
  row("random 6x6", random_game(6, 1), true);
  row("random 8x8", random_game(8, 2), true);
  row("random 9x9", random_game(9, 3), false);
  row("free-riding 11x11", build_question_game(freeride_spec()), false);

  std::printf("\n%-22s %12s %12s %9s %6s\n", "property (1000 trials)", "serial", "parallel", "speedup", "agree");
  GenSpec spec;
  spec.rows = 2;
  spec.max_rows = 4;
  spec.cols = 2;
  spec.max_cols = 4;
  spec.trials = 1000;
  for (auto p : {Property::Theorem1, Property::HEquivalence, Property::Oddness}) {
    PropertyReport s, q;
    const double ts = seconds([&] { s = verify_property(p, spec, Execution::Serial); }, 1);
    const double tp = seconds([&] { q = verify_property(p, spec, Execution::Parallel); }, 1);
    const bool agree = s.violations.size() == q.violations.size() && s.skipped == q.skipped;
    std::printf("%-22s %11.4fs %11.4fs %8.2fx %6s\n", to_string(p).c_str(), ts, tp, ts / tp, agree ? "yes" : "NO");
  }
  return 0;
}
