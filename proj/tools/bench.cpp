// Benchmark: the flow-based tableau maps against the serial enumeration
// reference, and serial against OpenMP batch evaluation.

#include <chrono>
#include <iostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tropnet/multipath.hpp"

using namespace tropnet;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void bench_solver_vs_reference(int n, int trials) {
  const PlanarNetwork h = horn_network(n);
  std::vector<Weighting> ws;
  for (int t = 0; t < trials; ++t) ws.push_back(random_weighting(h, t));

  auto t0 = Clock::now();
  std::vector<Tableau> flow;
  for (const Weighting& w : ws) flow.push_back(m_map(h, w, false));
  const double flow_ms = ms_since(t0);

  t0 = Clock::now();
  std::vector<Tableau> ref;
  for (const Weighting& w : ws) ref.push_back(m_map_reference(h, w));
  const double ref_ms = ms_since(t0);

  if (flow != ref) {
    std::cerr << "MISMATCH between flow and reference tableaux\n";
    std::exit(1);
  }
  std::cout << "m-map on the rank-" << n << " horn network, " << trials
            << " weightings\n"
            << "  flow solver : " << flow_ms << " ms\n"
            << "  enumeration : " << ref_ms << " ms  (x"
            << ref_ms / flow_ms << ")\n";
}

void bench_serial_vs_parallel(int n, int trials) {
  const PlanarNetwork g = gamma0(n);
  std::vector<Weighting> ws;
  for (int t = 0; t < trials; ++t) ws.push_back(random_weighting(g, t));

  auto t0 = Clock::now();
  const auto serial = l_map_batch(g, ws, false);
  const double serial_ms = ms_since(t0);

  t0 = Clock::now();
  const auto parallel = l_map_batch(g, ws, true);
  const double parallel_ms = ms_since(t0);

  if (serial != parallel) {
    std::cerr << "MISMATCH between serial and parallel batches\n";
    std::exit(1);
  }
  std::cout << "L-map batch on gamma0(" << n << "), " << trials
            << " weightings\n"
            << "  serial   : " << serial_ms << " ms\n"
            << "  parallel : " << parallel_ms << " ms  (speedup x"
            << serial_ms / parallel_ms << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  int trials = argc > 1 ? std::atoi(argv[1]) : 40;
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; parallel lanes run serially\n";
#endif
  // Pair enumeration wins on tiny ranks and loses past rank 5; the
  // ExplosionGuard fallback in the tests exploits exactly that window.
  bench_solver_vs_reference(3, std::min(trials, 20));
  bench_solver_vs_reference(5, std::min(trials, 10));
  bench_solver_vs_reference(6, std::min(trials, 5));
  bench_serial_vs_parallel(5, trials);
  bench_serial_vs_parallel(6, trials);
  return 0;
}
