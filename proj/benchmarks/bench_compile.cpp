#include <benchmark/benchmark.h>

#include <parity/analysis.hpp>
#include <parity/chip_compiler.hpp>
#include <parity/circuit.hpp>
#include <parity/lattice.hpp>
#include <parity/oracle.hpp>
#include <parity/square_alt.hpp>

using namespace parity;

namespace {

void BM_CompileSquares(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Layout l = gen_squares(n, n);
  for (auto _ : state) {
    auto res = compile(l, {});
    benchmark::DoNotOptimize(res.circuit.moments.data());
  }
  state.SetItemsProcessed(state.iterations() * l.n_constraints());
}
BENCHMARK(BM_CompileSquares)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_CompileRandom(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int d = static_cast<int>(state.range(1));
  Layout l = gen_random(n, n, 0.5, 1);
  for (auto _ : state) {
    auto res = compile(l, {.d = d});
    benchmark::DoNotOptimize(res.circuit.moments.data());
  }
  state.SetItemsProcessed(state.iterations() * l.n_constraints());
}
BENCHMARK(BM_CompileRandom)
    ->Args({16, 1})
    ->Args({16, 2})
    ->Args({32, 1})
    ->Args({32, 2})
    ->Args({64, 1});

void BM_CompileLineParallel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Layout l = gen_random(n, n, 0.5, 1);
  for (auto _ : state) {
    auto res = compile(l, {.d = 1, .line_parallel = true});
    benchmark::DoNotOptimize(res.circuit.moments.data());
  }
}
BENCHMARK(BM_CompileLineParallel)->Arg(16)->Arg(32);

void BM_CompileSquaresAlt(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Layout l = gen_squares(n, n);
  for (auto _ : state) {
    Circuit c = compile_squares_alt(l);
    benchmark::DoNotOptimize(c.moments.data());
  }
}
BENCHMARK(BM_CompileSquaresAlt)->Arg(6)->Arg(16)->Arg(64);

void BM_VerifyExhaustive(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Layout l = gen_random(n, n, 0.5, 3);
  Circuit c = compile(l, {}).circuit;
  for (auto _ : state) {
    auto v = verify_exhaustive(l, c);
    benchmark::DoNotOptimize(v.ok);
  }
  state.SetItemsProcessed(state.iterations() * (1u << l.n_qubits()));
}
BENCHMARK(BM_VerifyExhaustive)->Arg(3)->Arg(4);

void BM_VerifySampled(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Layout l = gen_random(n, n, 0.5, 3);
  Circuit c = compile(l, {}).circuit;
  for (auto _ : state) {
    auto v = verify_sampled(l, c, 100, 1);
    benchmark::DoNotOptimize(v.ok);
  }
}
BENCHMARK(BM_VerifySampled)->Arg(16)->Arg(32);

void BM_RunBench(benchmark::State& state) {
  BenchConfig cfg{.sizes = {8, 16}, .r3s = {0.0, 1.0}, .ds = {1},
                  .samples = 5, .seed = 1,
                  .jobs = static_cast<int>(state.range(0))};
  for (auto _ : state) {
    auto rows = run_bench(cfg);
    benchmark::DoNotOptimize(rows.data());
  }
}
BENCHMARK(BM_RunBench)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
