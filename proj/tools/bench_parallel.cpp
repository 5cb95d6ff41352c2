// Compares the OpenMP block-parallel simulation and curve kernels against
// their serial reference paths, checking that results are bit-identical.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gsdesign/designs.hpp"
#include "gsdesign/performance.hpp"
#include "gsdesign/simulate.hpp"

namespace {

template <typename F>
double time_ms(F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both paths run serially\n");
#endif

  gsd::TrialParams params;
  params.stages = 3;
  params.sigma0 = params.sigma1 = 2.0;
  const gsd::Design design = gsd::design_double_triangular(params);

  gsd::SimConfig cfg;
  cfg.replicates = 2'000'000;
  cfg.seed = 42;
  cfg.tau = params.delta;

  gsd::SimResult serial_result, parallel_result;
  const double t_serial = time_ms([&] { serial_result = gsd::simulate_trials_serial(design, cfg); });
  const double t_parallel = time_ms([&] { parallel_result = gsd::simulate_trials(design, cfg); });
  const bool sim_match = serial_result.reject_rate == parallel_result.reject_rate &&
                         serial_result.mean_n == parallel_result.mean_n;
  std::printf("simulate (%llu reps): serial %.1f ms, parallel %.1f ms, speedup %.2fx, "
              "bit-identical: %s\n",
              static_cast<unsigned long long>(cfg.replicates), t_serial, t_parallel,
              t_serial / t_parallel, sim_match ? "yes" : "NO");

  const auto [lo, hi] = gsd::default_tau_range(design);
  gsd::PerformanceCurve c_serial, c_parallel;
  const double tc_serial =
      time_ms([&] { c_serial = gsd::curves(design, lo, hi, 201, {}, false); });
  const double tc_parallel =
      time_ms([&] { c_parallel = gsd::curves(design, lo, hi, 201, {}, true); });
  bool curve_match = true;
  for (std::size_t i = 0; i < c_serial.tau.size(); ++i) {
    curve_match = curve_match && c_serial.power[i] == c_parallel.power[i] &&
                  c_serial.ess[i] == c_parallel.ess[i];
  }
  std::printf("curves (201 points): serial %.1f ms, parallel %.1f ms, speedup %.2fx, "
              "bit-identical: %s\n",
              tc_serial, tc_parallel, tc_serial / tc_parallel, curve_match ? "yes" : "NO");
  return (sim_match && curve_match) ? 0 : 1;
}
