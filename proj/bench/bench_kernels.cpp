#include <benchmark/benchmark.h>

#include "cocycle_lab/braidings.hpp"
#include "cocycle_lab/kernels.hpp"
#include "cocycle_lab/klein.hpp"

using namespace cocycle_lab;
using kernels::Exec;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_Cocycle3Cyclic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  const Cochain phi = cyclic_qabc(n, root_of_unity(n, 1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::first_cocycle3_failure(phi, exec_of(state)));
}
BENCHMARK(BM_Cocycle3Cyclic)->ArgsProduct({{0, 1}, {8, 16}})->Unit(benchmark::kMillisecond);

void BM_Cocycle3Klein(benchmark::State& state) {
  const Cochain phi = h_a(Rational(2, 3)) * g_b(CycScalar::i());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::first_cocycle3_failure(phi, exec_of(state)));
}
BENCHMARK(BM_Cocycle3Klein)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_HexagonKlein(benchmark::State& state) {
  const auto braidings = enumerate_klein_braidings(4);
  for (auto _ : state)
    for (const auto& b : braidings) benchmark::DoNotOptimize(kernels::first_hexagon_failure(b.phi, b.R, exec_of(state)));
}
BENCHMARK(BM_HexagonKlein)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_HexagonSolutions(benchmark::State& state) {
  const Cochain phi = phi_X(KleinSubset{KleinSubset::sigma | KleinSubset::tau});
  for (auto _ : state) benchmark::DoNotOptimize(hexagon_solutions(phi, 4, exec_of(state)));
}
BENCHMARK(BM_HexagonSolutions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
