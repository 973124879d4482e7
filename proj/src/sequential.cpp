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

#include "lockup/sequential.hpp"

#include <algorithm>
#include <cmath>

namespace lockup {

namespace {
constexpr double kNoEntry = 2.0;  // participation cutoff sentinel above any v2
}

SqrtSeparating::SqrtSeparating(double cost) : c_(cost) {
  if (!(cost > 0.0)) throw std::invalid_argument("SqrtSeparating: cost must be > 0");
  switch_ = 4.0 * c_ * c_ / (1.0 + c_);
  pool_ = 1.0 / (1.0 + c_);
  k3_ = 4.0 * c_ * c_ * c_;
  top_ = (1.0 + k3_) / (3.0 * c_ * (1.0 + c_));
}

double SqrtSeparating::bidder1_deposit(double v1) const {
  if (v1 < switch_ || switch_ >= 1.0) {
    return (1.0 + c_) * v1 * v1 / (4.0 * c_ * c_);
  }
  if (v1 < pool_) {
    return (std::pow((1.0 + c_) * v1, 1.5) + k3_) / (3.0 * c_ * (1.0 + c_));
  }
  return top_;
}

double SqrtSeparating::bidder1_bid(double v1) const {
  return std::min(v1, bidder1_deposit(v1));
}

double SqrtSeparating::inverse_type(double d1) const {
  if (d1 < 0.0 || d1 > top_) {
    throw std::out_of_range("SqrtSeparating::inverse_type: deposit off schedule");
  }
  if (d1 <= switch_) {
    return std::sqrt(4.0 * c_ * c_ * d1 / (1.0 + c_));
  }
  const double t = 3.0 * c_ * (1.0 + c_) * d1 - k3_;
  return std::pow(t, 2.0 / 3.0) / (1.0 + c_);
}

double SqrtSeparating::entrant_bid(double d1) const {
  if (d1 > top_) return 0.0;
  return std::min(d1, inverse_type(d1));
}

double SqrtSeparating::entry_threshold(double d1) const {
  if (d1 > top_) return kNoEntry;  // belief pools on the top; entry never profits
  return (1.0 + c_) * entrant_bid(d1);
}

double SqrtSeparating::response(double d1, double v2) const {
  const double thr = entry_threshold(d1);
  return v2 >= thr ? entrant_bid(d1) : 0.0;
}

Belief SqrtSeparating::belief(double d1) const {
  // the pooled top deposit itself maps to the truncated prior, not a point
  if (d1 >= top_ - 1e-12) return Belief::truncated(pool_, 1.0);
  return Belief::point(inverse_type(d1));
}

UniformConditional::UniformConditional(double cost) : c_(cost) {
  if (!(cost > 0.0)) throw std::invalid_argument("UniformConditional: cost must be > 0");
  u_ = c_ / (1.0 + c_);
  pool_ = 1.0 / (1.0 + c_);
  top_ = (1.0 + c_ * c_) / (2.0 * c_ * (1.0 + c_));
}

double UniformConditional::bidder1_deposit(double v1) const {
  if (v1 < u_) return 0.0;
  if (v1 < pool_) {
    return (1.0 + c_) * v1 * v1 / (2.0 * c_) + c_ / (2.0 * (1.0 + c_));
  }
  return top_;
}

double UniformConditional::bidder1_bid(double v1) const {
  return v1 < u_ ? 0.0 : std::min(v1, bidder1_deposit(v1));
}

double UniformConditional::inverse_type(double d1) const {
  if (d1 <= u_ || d1 > top_) {
    throw std::out_of_range("UniformConditional::inverse_type: deposit off schedule");
  }
  const double r = 2.0 * c_ * d1 / (1.0 + c_) - c_ * c_ / ((1.0 + c_) * (1.0 + c_));
  return std::sqrt(r);
}

double UniformConditional::entrant_bid(double d1) const {
  if (d1 > top_) return 0.0;
  if (d1 <= u_) return d1;  // bidder 1 is believed to bid his deposit here
  return inverse_type(d1);
}

double UniformConditional::entry_threshold(double d1) const {
  if (d1 > top_) return kNoEntry;
  return (1.0 + c_) * entrant_bid(d1);
}

double UniformConditional::response(double d1, double v2) const {
  const double thr = entry_threshold(d1);
  return v2 >= thr ? entrant_bid(d1) : 0.0;
}

Belief UniformConditional::belief(double d1) const {
  if (d1 >= top_ - 1e-12) return Belief::truncated(pool_, 1.0);
  if (d1 == 0.0) return Belief::truncated(0.0, u_);  // on-path pool of non-entrants
  if (d1 <= u_) return Belief::point(u_);            // off-path low deposits
  return Belief::point(inverse_type(d1));
}

}  // namespace lockup
