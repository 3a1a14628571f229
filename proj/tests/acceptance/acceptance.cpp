// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Exits 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "skein/sweeps.hpp"

using namespace skein;

namespace {

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds; 0 means none
  std::function<std::vector<SweepReport>()> run;
};

unsigned worker_count() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "product matches the quantum torus oracle, box 8", 60.0,
       [] { return std::vector{oracle_sweep(8, worker_count())}; }},
      {2, "associativity on 1000 random triples, box 10", 0.0,
       [] { return std::vector{associativity_sweep(1000, 10, 0x5eed0002)}; }},
      {3, "Chebyshev closure (box 5, n <= 12) and Jones-Wenzl change of basis (n <= 20)", 0.0,
       [] { return std::vector{chebyshev_sweep(5, 12), jones_wenzl_sweep(20)}; }},
      {4, "commutator closure gives four parity classes, N = 2..6", 0.0,
       [] { return std::vector{closure_sweep(2, 6)}; }},
      {5, "abelianization certificates replay, box 6", 0.0,
       [] { return std::vector{ab_certificate_sweep(6), quotient_sweep(4)}; }},
      {6, "every coprime triple in box 9 reduces with a valid certificate", 30.0,
       [] { return std::vector{reduction_sweep(9)}; }},
      {7, "generating set and Z2 grading", 0.0, [] { return std::vector{generators_check()}; }},
      {8, "find_diffeo on 500 random curves", 0.0, [] { return std::vector{diffeo_sweep(500, 0x5eed0008)}; }},
      {9, "common curve of 500 random pairs of tori", 0.0,
       [] { return std::vector{intersection_sweep(500, 0x5eed0009)}; }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<SweepReport> reports = c.run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool ok = true;
    std::uint64_t checked = 0;
    std::string detail;
    for (const SweepReport& r : reports) {
      checked += r.checked;
      if (!r.passed()) {
        ok = false;
        detail += " [" + r.name + ": " + std::to_string(r.failures) + " failures, first: " + r.counterexample + "]";
      }
    }
    if (c.time_limit > 0 && seconds > c.time_limit) {
      ok = false;
      detail += " [over time limit of " + std::to_string(c.time_limit) + " s]";
    }
    std::printf("criterion %d: %s  %s (%llu checks, %.2f s)%s\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str(),
                static_cast<unsigned long long>(checked), seconds, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
