// Timing harness for the three pair-counting kernels, serial reference vs
// the OpenMP path. Results are checked for agreement while timing, so a
// regression in either path shows up here as well as in the unit tests.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "rforge/coloring.hpp"
#include "rforge/gf.hpp"
#include "rforge/hadamard.hpp"
#include "rforge/srg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace rforge;
using Clock = std::chrono::steady_clock;

namespace {

template <typename Fn>
double best_ms(int reps, Fn&& fn) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    fn();
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    best = std::min(best, ms);
  }
  return best;
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool agree) {
  std::printf("%-34s %10.2f ms %10.2f ms %7.2fx  %s\n", name.c_str(), serial_ms, parallel_ms,
              serial_ms / parallel_ms, agree ? "ok" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int reps = 3;
  if (argc > 1) reps = std::max(1, std::atoi(argv[1]));

#ifdef _OPENMP
  std::printf("threads: %d, reps: %d\n", omp_get_max_threads(), reps);
#else
  std::printf("built without OpenMP; both columns run serial code. reps: %d\n", reps);
#endif
  std::printf("%-34s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

  {  // exhaustive pair verification of a residue graph
    const auto g = srg::paley_graph(gf::FieldSpec::create(1009, 1));
    srg::SrgCheck ser{}, par{};
    const double s = best_ms(reps, [&] { ser = srg::srg_params_serial(g); });
    const double p = best_ms(reps, [&] { par = srg::srg_params(g); });
    row("srg pair verification q=1009", s, p,
        ser.is_srg && par.is_srg && ser.params == par.params);
  }

  {  // full delta scan over a pair coloring
    const auto g = srg::paley_graph(gf::FieldSpec::create(61, 1));
    const auto col = coloring::build_psi(g, hadamard::sylvester(4));
    coloring::AvoidanceCertificate ser{}, par{};
    const int m = static_cast<int>(srg::theta(srg::srg_params(g).params)) * 16 + 1;
    const double s = best_ms(reps, [&] { ser = coloring::certify_avoidance_serial(col, m); });
    const double p = best_ms(reps, [&] { par = coloring::certify_avoidance(col, m); });
    row("delta scan K_{61x16}", s, p,
        ser.max_delta == par.max_delta && ser.witness.v1 == par.witness.v1 &&
            ser.witness.v2 == par.witness.v2 && ser.witness.w == par.witness.w);
  }

  {  // exhaustive forced-verdict search
    coloring::SearchOptions serial_opts;
    serial_opts.parallel = false;
    serial_opts.node_budget = uint64_t{1} << 30;
    coloring::SearchOptions parallel_opts;
    parallel_opts.node_budget = uint64_t{1} << 30;
    coloring::SearchResult ser{coloring::SearchResult::Verdict::forced, std::nullopt, 0};
    coloring::SearchResult par{coloring::SearchResult::Verdict::forced, std::nullopt, 0};
    const double s =
        best_ms(reps, [&] { ser = coloring::exhaustive_ramsey(2, 5, 2, 2, serial_opts); });
    const double p =
        best_ms(reps, [&] { par = coloring::exhaustive_ramsey(2, 5, 2, 2, parallel_opts); });
    row("exhaustive search 2x5 target 2,2", s, p, ser.verdict == par.verdict);
  }

  {  // avoiding-verdict search must also return the same coloring
    coloring::SearchOptions serial_opts;
    serial_opts.parallel = false;
    coloring::SearchResult ser{coloring::SearchResult::Verdict::forced, std::nullopt, 0};
    coloring::SearchResult par{coloring::SearchResult::Verdict::forced, std::nullopt, 0};
    const double s =
        best_ms(reps, [&] { ser = coloring::exhaustive_ramsey(3, 3, 3, 2, serial_opts); });
    const double p = best_ms(reps, [&] { par = coloring::exhaustive_ramsey(3, 3, 3, 2); });
    const bool agree = ser.verdict == par.verdict &&
                       (!ser.coloring || !par.coloring || *ser.coloring == *par.coloring);
    row("exhaustive search 3x3 target 2,3", s, p, agree);
  }

  return 0;
}
