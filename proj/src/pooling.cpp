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

#include "lockup/pooling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lockup/numerics.hpp"

namespace lockup {

namespace {

double effective_pool_top(double d1) { return std::min(1.0, d1); }

// Largest v2-profit over admissible deposits d2 in [u, min{1,d1}].
// Profit is -c u at d2 = u, has at most one interior local max (the larger
// FOC root), and may be maximized at the upper corner when the root clips.
double max_entry_profit(const PoolingParams& p, double v2, double d1) {
  const double m = effective_pool_top(d1);
  double best = -p.cost * p.u;
  const double disc = v2 * v2 - 2.0 * p.cost * (m * m - p.u * p.u);
  if (disc >= 0.0) {
    const double root = 0.5 * (v2 + std::sqrt(disc));
    if (root > p.u && root < m) best = std::max(best, pool_profit(p, v2, d1, root));
  }
  best = std::max(best, pool_profit(p, v2, d1, m));
  return best;
}

double entry_threshold_above_u(const PoolingParams& p, double d1) {
  if (max_entry_profit(p, 1.0, d1) < 0.0) return 1.0;
  double lo = p.u, hi = 1.0;
  for (int i = 0; i < 90 && hi - lo > 1e-14; ++i) {
    const double mid = 0.5 * (lo + hi);
    (max_entry_profit(p, mid, d1) >= 0.0 ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

double pool_profit(const PoolingParams& p, double v2, double d1, double d2) {
  const double m = effective_pool_top(d1);
  const double u = p.u;
  const double win = d2 * d2 - u * u;
  const double pay = (2.0 / 3.0) * (d2 * d2 * d2 - u * u * u);
  return (win * v2 - pay) / (m * m - u * u) - p.cost * d2;
}

double interior_deposit(const PoolingParams& p, double d1, double v2) {
  if (!(d1 > p.u)) {
    throw std::invalid_argument("interior_deposit: requires d1 > u");
  }
  const double m = effective_pool_top(d1);
  const double disc = v2 * v2 - 2.0 * p.cost * (m * m - p.u * p.u);
  if (disc < 0.0) {
    throw std::domain_error("interior_deposit: negative discriminant, no interior bid");
  }
  return std::min(d1, 0.5 * (v2 + std::sqrt(disc)));
}

double entry_threshold(const PoolingParams& p, double d1) {
  if (!(d1 > 0.0)) return 0.0;
  if (d1 <= p.u) return (1.0 + p.cost) * d1;
  return entry_threshold_above_u(p, d1);
}

double pooling_bidder1_deposit(const PoolingParams& p, double v1) {
  return v1 >= p.u ? 1.0 : 0.0;
}

double pooling_bidder1_bid(const PoolingParams& p, double v1) {
  return v1 >= p.u ? v1 : 0.0;
}

double bidder2_pooling_response(const PoolingParams& p, double d1, double v2) {
  if (d1 <= p.u) {
    return v2 >= (1.0 + p.cost) * d1 ? d1 : 0.0;
  }
  if (v2 < entry_threshold(p, d1)) return 0.0;
  return interior_deposit(p, d1, v2);
}

Belief pooling_belief(const PoolingParams& p, double d1) {
  if (d1 < 0.0 || d1 > p.dbar) {
    throw std::domain_error("pooling_belief: deposit outside [0, dbar]");
  }
  if (d1 <= p.u) return Belief::truncated(d1, p.u);
  return Belief::truncated(p.u, effective_pool_top(d1));
}

Bidder2Slice pooling_slice(const PoolingParams& p, double d1) {
  Bidder2Slice s;
  s.entry_threshold = entry_threshold(p, d1);
  if (d1 <= p.u) {
    s.bid = [d1](double) { return d1; };
  } else {
    const double m = effective_pool_top(d1);
    const double k = 2.0 * p.cost * (m * m - p.u * p.u);
    s.bid = [d1, k](double v2) {
      const double disc = std::max(0.0, v2 * v2 - k);
      return std::min(d1, 0.5 * (v2 + std::sqrt(disc)));
    };
  }
  return s;
}

double pooling_bar_v(const PoolingParams& p, double d1) {
  const double m = effective_pool_top(d1);
  return d1 + 2.0 * p.cost * (m * m - p.u * p.u) / (4.0 * d1);
}

double pooling_deviation_profit(const PoolingParams& p, const Distribution& dist,
                                double v1, double d1) {
  if (!(d1 > p.u) || d1 > p.dbar) {
    throw std::invalid_argument("pooling_deviation_profit: d1 outside (u, dbar]");
  }
  return bidder1_payoff_vs_slice(dist, p.cost, v1, d1, pooling_slice(p, d1));
}

double pooling_zero_profit_residual(const PoolingParams& p) {
  return pool_profit(p, p.v, 1.0, interior_deposit(p, 1.0, p.v));
}

PoolingParams solve_marginal_types(double cost, double dbar) {
  if (!(cost > 0.0)) throw std::invalid_argument("solve_marginal_types: cost must be > 0");
  // Outer residual in u: the marginal type's indifference u v(1)^2 = c with the
  // inner solve supplying v(1) for the candidate u.
  const auto residual = [cost, dbar](double u) {
    PoolingParams trial{cost, u, 0.0, dbar};
    const double v1 = entry_threshold_above_u(trial, 1.0);
    return u * v1 * v1 - cost;
  };
  const double lo_scan = 0.02, hi_scan = 0.98, step = 0.01;
  double prev_u = lo_scan, prev_r = residual(lo_scan);
  for (double u = lo_scan + step; u <= hi_scan + 1e-12; u += step) {
    const double r = residual(u);
    if (prev_r == 0.0 || prev_r * r < 0.0) {
      const double root =
          prev_r == 0.0 ? prev_u : find_root(residual, {prev_u, u, 1e-13});
      PoolingParams p{cost, root, 0.0, dbar};
      p.v = entry_threshold_above_u(p, 1.0);
      if (!p.inequality_holds()) {
        std::ostringstream msg;
        msg << "solve_marginal_types: candidate u=" << p.u
            << " violates the no-small-deposit-entry inequality ((u(1+c))^2 = "
            << p.inequality_lhs() << " > c = " << cost << ")";
        throw std::runtime_error(msg.str());
      }
      return p;
    }
    prev_u = u;
    prev_r = r;
  }
  std::ostringstream msg;
  msg << "solve_marginal_types: no sign change for u in [" << lo_scan << ", "
      << hi_scan << "] at c = " << cost;
  throw std::runtime_error(msg.str());
}

}  // namespace lockup
