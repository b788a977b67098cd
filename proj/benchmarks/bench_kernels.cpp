// Microbenchmarks for the enumeration kernels: ledger computation over the
// full function space, duality round-trips, gate construction and the cube
// cover pipeline.

#include <benchmark/benchmark.h>

#include "ordkit/duality.hpp"
#include "ordkit/generators.hpp"
#include "ordkit/leaps.hpp"
#include "ordkit/sigma.hpp"

using namespace ordkit;

namespace {

FiniteSemilattice bench_host(int base) {
  // deterministic host; size grows with the base poset size
  return random_semilattice(1234, base);
}

void BM_ValidateSemilattice(benchmark::State& state) {
  FiniteSemilattice K = bench_host(static_cast<int>(state.range(0)));
  std::vector<int> table;
  for (int a = 0; a < K.size(); ++a)
    for (int b = 0; b < K.size(); ++b) table.push_back(K.meet(a, b));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        validate_semilattice(K.size(), table, K.zero()));
  }
}
BENCHMARK(BM_ValidateSemilattice)->Arg(6)->Arg(9)->Arg(12);

void BM_DualityRoundtrip(benchmark::State& state) {
  FiniteSemilattice K = bench_host(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_duality_roundtrip(K));
  }
}
BENCHMARK(BM_DualityRoundtrip)->Arg(6)->Arg(9)->Arg(12);

void BM_LedgerSweep(benchmark::State& state) {
  FiniteSemilattice K = bench_host(static_cast<int>(state.range(0)));
  DualSemilattice D = dual_semilattice(K);
  const Subset total = Subset{1} << K.size();
  for (auto _ : state) {
    for (Subset bits = 0; bits < total; ++bits) {
      JumpLedger l = compute_ledger(BinaryFunction{&K, bits}, D);
      benchmark::DoNotOptimize(l.n_of_f);
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(total));
}
BENCHMARK(BM_LedgerSweep)->Arg(6)->Arg(8);

void BM_DiscretenessAudit(benchmark::State& state) {
  FiniteSemilattice K = bench_host(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_discreteness(K, 16));
  }
}
BENCHMARK(BM_DiscretenessAudit)->Arg(6)->Arg(8);

void BM_GatePair(benchmark::State& state) {
  ChainProductSublattice K = full_grid({4, 4, 4});
  const FiniteDistributiveLattice& L = K.lattice();
  ConvexSet A = interval(L, K.index_of({0, 0, 0}), K.index_of({1, 1, 0}));
  ConvexSet B = interval(L, K.index_of({3, 2, 2}), K.index_of({3, 3, 3}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gate_pair(L, A, B));
  }
}
BENCHMARK(BM_GatePair);

void BM_CoverPipeline(benchmark::State& state) {
  ChainProductSublattice K = full_grid({4, 4, 4});
  RealFunction f;
  f.host = &K;
  for (int x = 0; x < K.size(); ++x)
    f.values.push_back(Rational(K.pi(x, 0) + 2 * K.pi(x, 1) + 3 * K.pi(x, 2)));
  Rational eps(1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_leap_ledger(f, eps));
  }
}
BENCHMARK(BM_CoverPipeline);

}  // namespace

BENCHMARK_MAIN();
