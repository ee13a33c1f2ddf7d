// Parallel kernels against their serial references.
//
//   kernel_bench [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "boolnet/dsat.hpp"
#include "boolnet/network.hpp"
#include "boolnet/oracle.hpp"
#include "boolnet/random.hpp"
#include "boolnet/reference.hpp"

using namespace boolnet;

namespace {

double best_ms(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-28s %12.3f %12.3f %8.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %12s %12s %9s\n", "kernel", "serial ms", "parallel ms",
              "speedup");

  // Truth-table sweep over 18 variables.
  Rng rng(7);
  const Expr formula = embed(random_dnf(rng, 18, 40, 6));
  std::uint64_t a = 0, b = 0;
  const double s1 = best_ms(repeats, [&] { a = reference::count_satisfying_serial(formula); });
  const double p1 = best_ms(repeats, [&] { b = count_satisfying(formula); });
  row("count_satisfying (18 vars)", s1, p1);
  if (a != b) {
    std::fprintf(stderr, "count mismatch %llu vs %llu\n",
                 static_cast<unsigned long long>(a), static_cast<unsigned long long>(b));
    return 1;
  }

  // Network build, k=3, n=13.
  std::uint64_t c1 = 0, c2 = 0;
  const double s2 = best_ms(repeats, [&] {
    c1 = reference::build_network_serial(3, 13).metrics().cells;
  });
  const double p2 = best_ms(repeats, [&] { c2 = build_network(3, 13).metrics().cells; });
  row("build_network (k=3, n=13)", s2, p2);
  if (c1 != c2) return 1;

  // Batch DSAT.
  std::vector<DnfExpr> batch;
  for (int i = 0; i < 20000; ++i) batch.push_back(random_dnf(rng, 12, 8, 6));
  std::size_t sat_serial = 0, sat_parallel = 0;
  const double s3 = best_ms(repeats, [&] {
    sat_serial = 0;
    for (const auto& d : batch) sat_serial += dnf_satisfiable(d).satisfiable;
  });
  const double p3 = best_ms(repeats, [&] {
    sat_parallel = 0;
    for (const auto& v : dnf_satisfiable_batch(batch)) sat_parallel += v.satisfiable;
  });
  row("dnf_satisfiable (20000 DNFs)", s3, p3);
  return sat_serial == sat_parallel ? 0 : 1;
}
