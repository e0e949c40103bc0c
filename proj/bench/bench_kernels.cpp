// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "plocal/princhecke.hpp"
#include "plocal/shalikazeta.hpp"

using namespace plocal;

namespace {

PSVector fsigma(int n, long p) { return ps_fsigma(satake_ag(n, p), perm_identity(2 * n)); }

PSVector n1_vector(long p) {
  Satake s = satake_ag(1, p);
  return ps_basis(s, perm_identity(2), perm_longest(2));
}

void BM_hecke_parallel(benchmark::State& st) {
  PSVector f = fsigma(2, st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(hecke_apply(f, 2));
}
void BM_hecke_serial(benchmark::State& st) {
  PSVector f = fsigma(2, st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(hecke_apply_serial(f, 2));
}

void BM_shell_table_parallel(benchmark::State& st) {
  PSVector f = n1_vector(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(iwahori_shell_table(f, 2, 4));
}
void BM_shell_table_serial(benchmark::State& st) {
  PSVector f = n1_vector(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(iwahori_shell_table_serial(f, 2, 4));
}

void BM_intertwine_parallel(benchmark::State& st) {
  PSVector f = n1_vector(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(ag_intertwine_value(f, Mat::identity(2), 5));
}
void BM_intertwine_serial(benchmark::State& st) {
  PSVector f = n1_vector(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(ag_intertwine_value_serial(f, Mat::identity(2), 5));
}

}  // namespace

BENCHMARK(BM_hecke_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_hecke_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_shell_table_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_shell_table_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_intertwine_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_intertwine_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
