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

#include "lockup/distribution.hpp"
#include "lockup/payoff.hpp"
#include "lockup/sequential.hpp"

namespace lockup {

/// Two-level pooling equilibrium for the quadratic prior: bidder 1 deposits
/// either 0 (below the marginal type u) or 1, and bidder 2 enters after a
/// high deposit only above the threshold v = v(1).
struct PoolingParams {
  double cost = 0.0;
  double u = 0.0;  // bidder-1 marginal type
  double v = 0.0;  // bidder-2 entry threshold at d1 = 1
  double dbar = 4.0;

  double identity_residual() const { return u * v * v - cost; }
  double inequality_lhs() const { return (u * (1.0 + cost)) * (u * (1.0 + cost)); }
  bool inequality_holds() const { return inequality_lhs() <= cost; }
};

/// Expected profit of bidder-2 type v2 bidding d2 against the pool seen
/// behind a deposit d1 > u (beliefs truncate the prior to [u, min{1,d1}]).
double pool_profit(const PoolingParams& p, double v2, double d1, double d2);

/// Larger root of the entry FOC, clipped at min{1, d1}.
/// Discriminant-negative error when v2 cannot profitably bid interior.
double interior_deposit(const PoolingParams& p, double d1, double v2);

/// Smallest v2 whose maximized profit after seeing d1 is nonnegative;
/// returns 1 when no type enters. Below u the cutoff is (1+c) d1.
double entry_threshold(const PoolingParams& p, double d1);

double pooling_bidder1_deposit(const PoolingParams& p, double v1);
double pooling_bidder1_bid(const PoolingParams& p, double v1);
double bidder2_pooling_response(const PoolingParams& p, double d1, double v2);
Belief pooling_belief(const PoolingParams& p, double d1);
Bidder2Slice pooling_slice(const PoolingParams& p, double d1);

/// Entrant type whose interior bid reaches d1 (bidder 1 wins against every
/// entrant below it when bidding d1).
double pooling_bar_v(const PoolingParams& p, double d1);

/// Expected profit of bidder-1 type v1 deviating to a deposit d1 in (u, dbar].
double pooling_deviation_profit(const PoolingParams& p, const Distribution& dist,
                                double v1, double d1);

/// Residual of the bidder-2 zero-profit condition at (v, d1=1, interior optimum).
double pooling_zero_profit_residual(const PoolingParams& p);

/// Solves the marginal-type system
///   u v^2 = c,   profit of type v at d1 = 1 equals zero at the interior optimum,
/// by an outer scan-and-bracket on u with the entry threshold as inner solve.
/// Throws when no bracket is found or the no-small-deposit-entry inequality
/// (u(1+c))^2 <= c fails at the candidate.
PoolingParams solve_marginal_types(double cost, double dbar = 4.0);

}  // namespace lockup
