//------------------------------------------------------------------------------
//
//   Copyright 2026 the lockup authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

// Serial vs OpenMP throughput for the two data-parallel kernels: Monte Carlo
// outcome aggregation and the deviation-gain scans of the verifier.

#include <benchmark/benchmark.h>

#include "lockup/profile.hpp"
#include "lockup/sim.hpp"
#include "lockup/verify.hpp"

namespace {

using namespace lockup;

const StrategyProfile& pooling_profile() {
  static auto p = make_profile(Regime::Pooling, Distribution::quadratic(), 0.22);
  return *p;
}

const StrategyProfile& sqrt_profile() {
  static auto p =
      make_profile(Regime::SequentialSqrt, Distribution::sqrt_family(), 0.15);
  return *p;
}

void BM_MonteCarloSerial(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        monte_carlo(pooling_profile(), n, 42, Execution::Serial));
  }
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_MonteCarloParallel(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        monte_carlo(pooling_profile(), n, 42, Execution::Parallel));
  }
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_CheckBidder1Serial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_bidder1(sqrt_profile(), 24, 128, Execution::Serial));
  }
}

void BM_CheckBidder1Parallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_bidder1(sqrt_profile(), 24, 128, Execution::Parallel));
  }
}

BENCHMARK(BM_MonteCarloSerial)->Arg(1 << 17);
BENCHMARK(BM_MonteCarloParallel)->Arg(1 << 17);
BENCHMARK(BM_CheckBidder1Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckBidder1Parallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
