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

#include "lockup/payoff.hpp"

#include <algorithm>
#include <cmath>

#include "lockup/numerics.hpp"

namespace lockup {

double first_entrant_reaching(const Bidder2Slice& slice, double level) {
  const double t = std::clamp(slice.entry_threshold, 0.0, 1.0);
  if (t >= 1.0) return 1.0;
  if (slice.bid(t) >= level) return t;
  if (slice.bid(1.0) < level) return 1.0;
  double lo = t, hi = 1.0;
  for (int i = 0; i < 100 && hi - lo > 1e-14; ++i) {
    const double mid = 0.5 * (lo + hi);
    (slice.bid(mid) < level ? lo : hi) = mid;
  }
  return hi;
}

double bidder1_payoff_vs_slice(const Distribution& dist, double cost, double v1,
                               double d1, const Bidder2Slice& slice, double tol) {
  const double b1 = std::min(v1, d1);
  const double t = std::clamp(slice.entry_threshold, 0.0, 1.0);
  double value = 0.0;
  if (b1 > 0.0 && t > 0.0) {
    value += dist.cdf(t) * v1;  // bidder 2 out, price 0
  }
  if (t < 1.0 && b1 > 0.0) {
    const double w = first_entrant_reaching(slice, b1);
    if (w > t) {
      const auto integrand = [&](double v2) {
        return (v1 - slice.bid(v2)) * dist.pdf(v2);
      };
      value += integrate(integrand, t, w, tol).value;
    }
  }
  return value - cost * d1;
}

}  // namespace lockup
