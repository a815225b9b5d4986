#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "heckepaths/graphs.hpp"
#include "heckepaths/traces.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double time_of(const std::function<void()>& f, int reps) {
  auto start = Clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(Clock::now() - start).count() / reps;
}

void bench_graph(const hk::GraphRep& g, int L, int reps) {
  hk::Mat zp, zs;
  double tp = time_of([&] { zp = hk::z_trace(g, L, true); }, reps);
  double ts = time_of([&] { zs = hk::z_trace_serial(g, L); }, reps);
  double diff = (zp - zs).cwiseAbs().maxCoeff();
  std::printf("%-12s k=%d n=%-2d L=%-2d  parallel %8.3f ms  serial %8.3f ms  "
              "speedup %5.2fx  max|diff| %.3g\n",
              g.kind.c_str(), g.rl.k, g.rl.n, L, tp * 1e3, ts * 1e3, ts / tp, diff);
  hk::OracleTrace oracle = hk::trace_oracle(g, std::min(L, 5), false, 5000);
  hk::Mat zo = hk::z_trace(g, std::min(L, 5));
  double od = 0.0;
  for (int r = 0; r < g.size(); ++r)
    for (int c = 0; c < g.size(); ++c)
      if (oracle.computed[r][c])
        od = std::max(od, std::abs(oracle.value(r, c) - std::complex<double>(zo(r, c))));
  std::printf("%-12s oracle cross-check at L=%d: max|diff| %.3g\n", g.kind.c_str(),
              std::min(L, 5), od);
}

}  // namespace

int main(int argc, char** argv) {
  int L = argc > 1 ? std::atoi(argv[1]) : 12;
  int reps = argc > 2 ? std::atoi(argv[2]) : 3;
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both kernels run serially\n");
#endif
  bench_graph(hk::basic_graph(hk::RankLevel(3, 8)), L, reps);
  bench_graph(hk::basic_graph(hk::RankLevel(4, 9)), L, reps);
  bench_graph(hk::basic_graph(hk::RankLevel(4, 12)), L, reps);
  bench_graph(hk::ade_graph("E6"), L, reps);
  return 0;
}
