// Timing harness for the path kernel: serial reference vs the OpenMP-chunked
// execution, across alpha and skeleton resolution.

#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "steiner/schedules.hpp"
#include "steiner/stochastic.hpp"

namespace {

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

}  // namespace

int main(int argc, char** argv) {
  const std::int64_t n = argc > 1 ? std::atoll(argv[1]) : 200000;
  const int m = argc > 2 ? std::atoi(argv[2]) : 128;

  const steiner::Polygon square =
      steiner::RectParams(0.5, 0.5).polygon();

  std::printf("%-8s %-6s %-10s %-10s %-8s %s\n", "alpha", "m", "serial[s]",
              "openmp[s]", "speedup", "p_hat");
  for (double alpha : {2.0, 1.0}) {
    steiner::SimParams params;
    params.t = 0.2;
    params.m = m;
    params.n = n;
    params.seed = 42;

    const double t0 = now();
    const auto serial = steiner::estimate_exit_probability(
        square, {0, 0}, steiner::StableIndex(alpha), params,
        steiner::Exec::serial);
    const double t1 = now();
    const auto parallel = steiner::estimate_exit_probability(
        square, {0, 0}, steiner::StableIndex(alpha), params,
        steiner::Exec::parallel);
    const double t2 = now();

    if (serial.p_hat != parallel.p_hat || serial.std_err != parallel.std_err) {
      std::fprintf(stderr, "serial and parallel estimates disagree\n");
      return 1;
    }
    std::printf("%-8.2f %-6d %-10.3f %-10.3f %-8.2f %.6f\n", alpha, m,
                t1 - t0, t2 - t1, (t1 - t0) / (t2 - t1), parallel.p_hat);
  }
  return 0;
}
