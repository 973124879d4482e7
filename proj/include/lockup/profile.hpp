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

#include <memory>
#include <string>
#include <vector>

#include "lockup/distribution.hpp"
#include "lockup/payoff.hpp"
#include "lockup/sequential.hpp"

namespace lockup {

enum class Regime { Simultaneous, SequentialSqrt, SequentialUniform, Pooling };

std::string regime_name(Regime r);

/// Parses a regime string; "sequential" needs the distribution to pick the
/// sqrt or uniform variant.
Regime parse_regime(const std::string& name, const std::string& dist_name);

/// Structure of bidder 1's type space under a profile: intervals where the
/// deposit rule stays out, separates types, or pools them.
struct TypeRegion {
  enum class Kind { Out, Separating, Pooled };
  double lo;
  double hi;
  Kind kind;
};

/// A complete strategy profile: bidder 1's deposit rule (bid = min{v1, d1}),
/// bidder 2's response and beliefs as functions of the observed deposit, and
/// the bidder-2-wins tie-break baked into the payoff conventions.
class StrategyProfile {
public:
  virtual ~StrategyProfile() = default;

  virtual const std::string& name() const = 0;
  virtual const Distribution& dist() const = 0;
  virtual double cost() const = 0;
  virtual double dbar() const { return 4.0; }

  virtual double bidder1_deposit(double v1) const = 0;
  double bidder1_bid(double v1) const;

  /// Bidder 2's entry cutoff and bid schedule after observing d1.
  virtual Bidder2Slice bidder2_slice(double d1) const = 0;
  virtual Belief belief(double d1) const = 0;

  virtual std::vector<TypeRegion> type_regions() const = 0;

  /// Deposits worth probing off and on path (regime switch points etc).
  virtual std::vector<double> deposit_probes() const = 0;

  /// True for sequential regimes where bidder 2 observes the deposit.
  virtual bool sequential_game() const { return true; }
};

std::unique_ptr<StrategyProfile> make_profile(Regime regime,
                                              const Distribution& dist,
                                              double cost,
                                              double ode_step = 1e-4);

/// Wraps a profile with bidder 1's deposit rule scaled by a constant;
/// responses and beliefs still react to the observed (scaled) deposit.
std::unique_ptr<StrategyProfile> make_scaled_profile(
    std::unique_ptr<StrategyProfile> base, double scale);

}  // namespace lockup
