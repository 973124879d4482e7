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

#include "lockup/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "lockup/numerics.hpp"
#include "lockup/text_io.hpp"

namespace lockup {

namespace {

AuctionOutcome settle(const StrategyProfile& profile, double v1, double v2,
                      const Bidder2Slice& slice, double d1) {
  AuctionOutcome o;
  o.v1 = v1;
  o.v2 = v2;
  o.d1 = d1;
  o.b1 = std::min(v1, d1);
  o.bidder2_entered = v2 >= slice.entry_threshold;
  if (o.bidder2_entered) {
    o.d2 = slice.bid(v2);
    o.b2 = o.d2;
    if (o.b2 <= 0.0 && d1 > 0.0) {  // a zero bid only competes against d1 = 0
      o.bidder2_entered = false;
      o.d2 = o.b2 = 0.0;
    }
  }
  const double c = profile.cost();
  if (o.bidder2_entered && o.b2 >= o.b1 - kTieEps) {
    o.winner = Winner::Bidder2;
    o.price = o.b1;
    o.payoff1 = -c * o.d1;
    o.payoff2 = v2 - o.price - c * o.d2;
    o.welfare = v2 - c * (o.d1 + o.d2);
    o.misallocated = v1 > v2;
  } else if (o.b1 > 0.0) {
    o.winner = Winner::Bidder1;
    o.price = o.bidder2_entered ? o.b2 : 0.0;
    o.payoff1 = v1 - o.price - c * o.d1;
    o.payoff2 = -c * o.d2;
    o.welfare = v1 - c * (o.d1 + o.d2);
    o.misallocated = v2 > v1;
  } else {
    o.winner = Winner::None;
    o.payoff1 = -c * o.d1;
    o.payoff2 = -c * o.d2;
    o.welfare = -c * (o.d1 + o.d2);
    o.misallocated = true;  // the item stays unallocated
  }
  return o;
}

struct Accum {
  std::int64_t mis = 0, entered1 = 0, entered2 = 0;
  double welfare = 0, revenue = 0, waste = 0;
};

}  // namespace

AuctionOutcome run_auction(const StrategyProfile& profile, double v1, double v2) {
  if (!(v1 > 0.0 && v1 < 1.0 && v2 > 0.0 && v2 < 1.0)) {
    throw std::domain_error("run_auction: valuations must lie in (0,1)");
  }
  const double d1 = profile.bidder1_deposit(v1);
  return settle(profile, v1, v2, profile.bidder2_slice(d1), d1);
}

MonteCarloMetrics monte_carlo(const StrategyProfile& profile, std::int64_t n,
                              std::uint64_t seed, Execution exec) {
  if (n < 1) throw std::invalid_argument("monte_carlo: n must be >= 1");
  const Distribution& dist = profile.dist();
  const double c = profile.cost();
  constexpr std::int64_t kChunk = 8192;
  const std::int64_t nchunks = (n + kChunk - 1) / kChunk;
  std::vector<Accum> parts(static_cast<std::size_t>(nchunks));

  const auto run_chunk = [&](std::int64_t ci) {
    Accum acc;
    const std::int64_t begin = ci * kChunk;
    const std::int64_t end = std::min(n, begin + kChunk);
    for (std::int64_t i = begin; i < end; ++i) {
      const double v1 =
          dist.inverse_cdf(unit_draw(seed, 2 * static_cast<std::uint64_t>(i)));
      const double v2 = dist.inverse_cdf(
          unit_draw(seed, 2 * static_cast<std::uint64_t>(i) + 1));
      const double d1 = profile.bidder1_deposit(v1);
      const AuctionOutcome o =
          settle(profile, v1, v2, profile.bidder2_slice(d1), d1);
      acc.mis += o.misallocated ? 1 : 0;
      acc.entered1 += o.d1 > 0.0 ? 1 : 0;
      acc.entered2 += o.bidder2_entered ? 1 : 0;
      acc.welfare += o.welfare;
      acc.revenue += o.price;
      acc.waste += c * ((o.d1 - o.b1) + (o.d2 - o.b2));
    }
    parts[static_cast<std::size_t>(ci)] = acc;
  };

  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t ci = 0; ci < nchunks; ++ci) run_chunk(ci);
  } else {
    for (std::int64_t ci = 0; ci < nchunks; ++ci) run_chunk(ci);
  }

  Accum total;  // combine in chunk order so the result is execution-invariant
  for (const Accum& a : parts) {
    total.mis += a.mis;
    total.entered1 += a.entered1;
    total.entered2 += a.entered2;
    total.welfare += a.welfare;
    total.revenue += a.revenue;
    total.waste += a.waste;
  }

  MonteCarloMetrics m;
  m.n = n;
  const double dn = static_cast<double>(n);
  m.misallocation_prob = static_cast<double>(total.mis) / dn;
  m.misallocation_stderr =
      std::sqrt(m.misallocation_prob * (1.0 - m.misallocation_prob) / dn);
  m.expected_welfare = total.welfare / dn;
  m.expected_revenue = total.revenue / dn;
  m.expected_deposit_waste = total.waste / dn;
  m.bidder1_entry_rate = static_cast<double>(total.entered1) / dn;
  m.bidder2_entry_rate = static_cast<double>(total.entered2) / dn;
  return m;
}

double misallocation_quadrature(const StrategyProfile& profile, double tol) {
  const Distribution& dist = profile.dist();

  // F-mass of {v2 : the auction against type v1 misallocates}
  const auto inner_mass = [&](double v1) {
    const double d1 = profile.bidder1_deposit(v1);
    const double b1 = std::min(v1, d1);
    const Bidder2Slice slice = profile.bidder2_slice(d1);
    const double t = std::clamp(slice.entry_threshold, 0.0, 1.0);
    double mass = 0.0;
    if (b1 > 0.0) {
      // bidder 2 out on [0, t): bidder 1 wins; misallocated where v2 > v1
      if (t > v1) mass += dist.cdf(t) - dist.cdf(v1);
    } else {
      mass += dist.cdf(t);  // no winner at all
    }
    if (t < 1.0) {
      if (b1 <= 0.0) {
        // entrants always beat a silent bidder 1; misallocated where v2 < v1
        mass += dist.cdf(std::clamp(v1, t, 1.0)) - dist.cdf(t);
        return mass;
      }
      // bidder 2 wins from the first entrant whose bid reaches b1 (ties his)
      const double x = first_entrant_reaching(slice, b1 - kTieEps);
      // bidder 1 wins on [t, x): misallocated where v2 > v1
      const double lo1 = std::clamp(v1, t, x);
      mass += dist.cdf(x) - dist.cdf(lo1);
      // bidder 2 wins on [x, 1]: misallocated where v2 < v1
      const double hi2 = std::clamp(v1, x, 1.0);
      mass += dist.cdf(hi2) - dist.cdf(x);
    }
    return mass;
  };

  std::vector<double> cuts = {0.0, 1.0};
  for (const TypeRegion& r : profile.type_regions()) {
    cuts.push_back(r.lo);
    cuts.push_back(r.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] < 1e-14) continue;
    const auto integrand = [&](double v1) {
      return inner_mass(v1) * dist.pdf(v1);
    };
    total += integrate(integrand, cuts[i], cuts[i + 1],
                       tol / static_cast<double>(cuts.size()))
                 .value;
  }
  return total;
}

std::string metrics_to_json(const MonteCarloMetrics& m) {
  JsonWriter w;
  w.obj_open();
  w.kv("n", static_cast<std::int64_t>(m.n));
  w.kv("misallocation_prob", m.misallocation_prob);
  w.kv("misallocation_stderr", m.misallocation_stderr);
  w.kv("expected_welfare", m.expected_welfare);
  w.kv("expected_revenue", m.expected_revenue);
  w.kv("expected_deposit_waste", m.expected_deposit_waste);
  w.kv("bidder1_entry_rate", m.bidder1_entry_rate);
  w.kv("bidder2_entry_rate", m.bidder2_entry_rate);
  w.obj_close();
  std::string s = w.take();
  s.push_back('\n');
  return s;
}

}  // namespace lockup
