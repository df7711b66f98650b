// serial reference vs OpenMP sweep over F_q points of the local models
#include <benchmark/benchmark.h>

#include "foldhilb/localmodel.hpp"

using namespace foldhilb;

namespace {

void decomposition(benchmark::State& st, Exec exec) {
  const int n = static_cast<int>(st.range(0)), k = static_cast<int>(st.range(1)), q = static_cast<int>(st.range(2));
  auto I = reduced_ideal(n, k);
  auto P = primary_components(n, k);
  for (auto _ : st) {
    auto r = verify_decomposition_ff_report(I, P, q, exec);
    benchmark::DoNotOptimize(r);
    st.counters["points"] = static_cast<double>(r.points);
  }
}

void graph(benchmark::State& st, Exec exec) {
  for (auto _ : st) benchmark::DoNotOptimize(deformation_graph_check(3, 2, {3, 2, 1}, 3, exec));
}

}  // namespace

BENCHMARK_CAPTURE(decomposition, serial, Exec::Serial)->Args({4, 2, 3})->Args({4, 3, 3})->Args({5, 2, 2})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(decomposition, parallel, Exec::Parallel)->Args({4, 2, 3})->Args({4, 3, 3})->Args({5, 2, 2})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(graph, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(graph, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
