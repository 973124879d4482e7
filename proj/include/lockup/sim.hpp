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

#pragma once

#include <cstdint>

#include "lockup/profile.hpp"
#include "lockup/verify.hpp"

namespace lockup {

enum class Winner { Bidder1, Bidder2, None };

struct AuctionOutcome {
  double v1 = 0, v2 = 0;
  double d1 = 0, d2 = 0;
  double b1 = 0, b2 = 0;
  bool bidder2_entered = false;
  Winner winner = Winner::None;
  double price = 0;
  double payoff1 = 0, payoff2 = 0;
  double welfare = 0;
  bool misallocated = false;
};

/// Winner-side tie tolerance: on-path separating profiles tie exactly in real
/// arithmetic, so the bidder-2-wins rule must absorb round-off in the bids.
inline constexpr double kTieEps = 1e-9;

AuctionOutcome run_auction(const StrategyProfile& profile, double v1, double v2);

struct MonteCarloMetrics {
  std::int64_t n = 0;
  double misallocation_prob = 0;
  double misallocation_stderr = 0;
  double expected_welfare = 0;
  double expected_revenue = 0;
  double expected_deposit_waste = 0;  // c E[(d1-b1) + (d2-b2)]
  double bidder1_entry_rate = 0;
  double bidder2_entry_rate = 0;

  bool operator==(const MonteCarloMetrics&) const = default;
};

/// Seeded i.i.d. valuation pairs; per-draw-index random streams make the
/// result independent of the serial/parallel execution split.
MonteCarloMetrics monte_carlo(const StrategyProfile& profile, std::int64_t n,
                              std::uint64_t seed,
                              Execution exec = Execution::Parallel);

/// Probability mass of misallocated outcomes (wrong winner, or no winner),
/// by region-aware quadrature over the valuation square.
double misallocation_quadrature(const StrategyProfile& profile,
                                double tol = 1e-7);

std::string metrics_to_json(const MonteCarloMetrics& m);

}  // namespace lockup
