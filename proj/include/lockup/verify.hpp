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

#include <string>
#include <vector>

#include "lockup/profile.hpp"

namespace lockup {

enum class Execution { Serial, Parallel };

/// One side of the equilibrium check: best deviation gain per grid point.
struct CheckSection {
  double max_gain = 0.0;
  double worst_type = 0.0;     // grid value attaining max_gain
  double worst_deposit = 0.0;  // deviation deposit attaining it
  std::vector<double> grid;    // v1 values (bidder 1) or v2 values (bidder 2)
  std::vector<double> d1_probes;  // bidder-2 check only
  std::vector<double> gains;   // per type, or per (d1,v2) pair row-major
};

struct VerificationReport {
  std::string profile;
  double cost = 0.0;
  double eps = 0.0;
  CheckSection bidder1;
  CheckSection bidder2;
  double belief_residual = 0.0;
  bool pass = false;
};

/// Expected payoff of bidder-1 type v1 posting d1 against the profile's own
/// response to that deposit (PBE condition 1 evaluates deviations against
/// equilibrium beliefs and responses).
double bidder1_expected_payoff(const StrategyProfile& profile, double v1, double d1);

/// Expected payoff of bidder-2 type v2 posting/bidding d2 after observing d1,
/// against a belief over bidder 1's valuation. Closed form for the power family.
double bidder2_expected_payoff(const Belief& belief, const Distribution& dist,
                               double cost, double v2, double d1, double d2);

CheckSection check_bidder1(const StrategyProfile& profile, int type_grid,
                           int dev_grid, Execution exec);
CheckSection check_bidder2(const StrategyProfile& profile, int v2_grid,
                           int dev_grid, Execution exec);

/// Bayes consistency of on-path beliefs: point masses at preimages on
/// separating ranges, truncated priors on pools. Returns the worst residual.
double check_bayes_consistency(const StrategyProfile& profile, int sample_n);

VerificationReport verify_profile(const StrategyProfile& profile, double eps,
                                  int type_grid = 50, int dev_grid = 200,
                                  Execution exec = Execution::Parallel);

std::string report_to_json(const VerificationReport& report);

}  // namespace lockup
