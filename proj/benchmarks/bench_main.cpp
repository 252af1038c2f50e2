#include <benchmark/benchmark.h>

#include "collatz/cascades.hpp"
#include "collatz/forms.hpp"
#include "collatz/nat.hpp"
#include "collatz/sequence.hpp"
#include "collatz/stopping_forms.hpp"

using namespace collatz;

static void BM_StoppingTimeSweep(benchmark::State& state) {
  const std::uint64_t lo = state.range(0);
  for (auto _ : state) {
    std::uint64_t total = 0;
    for (std::uint64_t c = lo; c < lo + 10'000; ++c) {
      auto s = stopping_time(Nat(c));
      total += s ? s->stopping_time : 0;
    }
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * 10'000);
}
BENCHMARK(BM_StoppingTimeSweep)->Arg(2)->Arg(1'000'000);

static void BM_ScanWindow(benchmark::State& state) {
  for (auto _ : state) {
    WindowScan ws = scan_window(Nat(1), Nat(10'000), Nat(1), Nat(10'000));
    benchmark::DoNotOptimize(ws.forms.size());
  }
  state.SetItemsProcessed(state.iterations() * 10'000);
}
BENCHMARK(BM_ScanWindow);

static void BM_TotalStoppingBig(benchmark::State& state) {
  Nat big = Nat::pow(Nat(10), 142) - Nat::pow(Nat(10), 6) + 1;
  for (auto _ : state) {
    auto t = total_stopping_time(big);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_TotalStoppingBig);

static void BM_Decompose(benchmark::State& state) {
  Nat c = Nat::pow2(200) - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(c).p);
  }
}
BENCHMARK(BM_Decompose);

static void BM_NatMul(benchmark::State& state) {
  Nat a = Nat::pow(Nat(3), 500);
  Nat b = Nat::pow(Nat(7), 300);
  for (auto _ : state) {
    benchmark::DoNotOptimize((a * b).bit_length());
  }
}
BENCHMARK(BM_NatMul);

static void BM_Pmcs(benchmark::State& state) {
  for (auto _ : state) {
    std::uint64_t reached = 0;
    for (std::uint64_t v = 1; v <= 1000; ++v) {
      if (v % 3 == 0 || v == 1) continue;
      auto res = pmcs(Nat(v));
      reached += res ? 1 : 0;
    }
    benchmark::DoNotOptimize(reached);
  }
}
BENCHMARK(BM_Pmcs);

BENCHMARK_MAIN();
