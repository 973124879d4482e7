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

#include <functional>

#include "lockup/distribution.hpp"

namespace lockup {

/// Bidder 2's behavior after observing a fixed deposit d1: the lowest type
/// that submits a bid, and the (nondecreasing) bid of entering types.
/// A threshold above 1 means nobody enters.
struct Bidder2Slice {
  double entry_threshold = 0.0;
  std::function<double(double)> bid;  // defined for v2 >= entry_threshold
};

/// First v2 in the entrant range whose bid reaches `level`; returns 1.0 when
/// no entrant bid does (then bidder 1 outbids every entrant).
double first_entrant_reaching(const Bidder2Slice& slice, double level);

/// Expected payoff of bidder-1 type v1 posting deposit d1 (bidding
/// min{v1, d1}) against the given slice: wins at price 0 when bidder 2 stays
/// out and at the entrant's bid when b1 strictly exceeds it (bidder 2 takes
/// ties), minus the deposit cost.
double bidder1_payoff_vs_slice(const Distribution& dist, double cost, double v1,
                               double d1, const Bidder2Slice& slice,
                               double tol = 1e-10);

}  // namespace lockup
