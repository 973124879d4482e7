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

#include <stdexcept>

namespace lockup {

/// Bidder 2's posterior over bidder 1's valuation after seeing a deposit:
/// either a point mass or the prior truncated to an interval.
struct Belief {
  enum class Kind { PointMass, TruncatedPrior };
  Kind kind = Kind::PointMass;
  double location = 0.0;  // point mass
  double lo = 0.0, hi = 1.0;  // truncation bounds

  static Belief point(double at) {
    Belief b;
    b.kind = Kind::PointMass;
    b.location = at;
    return b;
  }
  static Belief truncated(double lo, double hi) {
    if (!(lo <= hi)) throw std::invalid_argument("Belief: unordered truncation");
    Belief b;
    b.kind = Kind::TruncatedPrior;
    b.lo = lo;
    b.hi = hi;
    return b;
  }
};

/// Separating equilibrium for the sqrt prior: bidder 1 under-deposits below
/// the switch point 4c^2/(1+c), over-deposits between there and 1/(1+c), and
/// the very top types pool at a constant deposit.
///
/// The middle branch is ((1+c)v)^{3/2} + 4c^3, all over 3c(1+c); the additive
/// constant is pinned by continuity with the low branch at the switch point.
class SqrtSeparating {
public:
  explicit SqrtSeparating(double cost);

  double cost() const { return c_; }
  double switch_point() const { return switch_; }      // 4c^2/(1+c)
  double pool_threshold() const { return pool_; }      // 1/(1+c)
  double top_deposit() const { return top_; }
  double entry_point() const { return 0.0; }           // every type enters

  double bidder1_deposit(double v1) const;
  double bidder1_bid(double v1) const;  // min{v1, d1(v1)}

  /// Inverse of the deposit schedule; out-of-range error above the top level.
  double inverse_type(double d1) const;

  /// Price an entrant pays after observing d1: min{d1, v(d1)}. Zero above top.
  double entrant_bid(double d1) const;
  /// Participation cutoff (1+c) * entrant_bid; sentinel > 1 above the top level.
  double entry_threshold(double d1) const;
  /// Bidder 2's deposit (= bid): entrant_bid if v2 clears the cutoff, else 0.
  double response(double d1, double v2) const;

  Belief belief(double d1) const;

private:
  double c_, switch_, pool_, top_, k3_;
};

/// Separation-conditional-on-entry equilibrium for the uniform prior: types
/// below c/(1+c) stay out, entrants over-deposit along a quadratic schedule,
/// top types pool.
class UniformConditional {
public:
  explicit UniformConditional(double cost);

  double cost() const { return c_; }
  double entry_point() const { return u_; }            // c/(1+c)
  double pool_threshold() const { return pool_; }      // 1/(1+c)
  double top_deposit() const { return top_; }

  double bidder1_deposit(double v1) const;
  double bidder1_bid(double v1) const;

  /// Inverse of the entrant schedule on (c/(1+c), top]; throws elsewhere.
  double inverse_type(double d1) const;

  double entrant_bid(double d1) const;
  double entry_threshold(double d1) const;
  double response(double d1, double v2) const;

  Belief belief(double d1) const;

private:
  double c_, u_, pool_, top_;
};

}  // namespace lockup
