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

#include "lockup/verify.hpp"

#include <algorithm>
#include <cmath>

#include "lockup/numerics.hpp"
#include "lockup/text_io.hpp"

namespace lockup {

double bidder1_expected_payoff(const StrategyProfile& profile, double v1,
                               double d1) {
  return bidder1_payoff_vs_slice(profile.dist(), profile.cost(), v1, d1,
                                 profile.bidder2_slice(d1));
}

double bidder2_expected_payoff(const Belief& belief, const Distribution& dist,
                               double cost, double v2, double d1, double d2) {
  // bidder 1 bids min{v1, d1}; bidder 2 wins ties (d2 >= b1) and pays b1
  if (belief.kind == Belief::Kind::PointMass ||
      belief.hi - belief.lo < 1e-12) {
    const double loc =
        belief.kind == Belief::Kind::PointMass ? belief.location : belief.lo;
    const double b1 = std::min(loc, d1);
    return (d2 >= b1 ? v2 - b1 : 0.0) - cost * d2;
  }
  const double lo = belief.lo, hi = belief.hi;
  const double mass = dist.cdf(hi) - dist.cdf(lo);
  double win_mass, expected_payment;
  if (d2 >= d1) {
    // beats every believed type; those above d1 bid only their deposit d1
    const double cut = std::clamp(d1, lo, hi);
    win_mass = mass;
    expected_payment =
        dist.partial_moment(lo, cut) + d1 * (dist.cdf(hi) - dist.cdf(cut));
  } else {
    const double cut = std::clamp(d2, lo, hi);
    win_mass = dist.cdf(cut) - dist.cdf(lo);
    expected_payment = dist.partial_moment(lo, cut);
  }
  return (v2 * win_mass - expected_payment) / mass - cost * d2;
}

namespace {

std::vector<double> sorted_unique(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end(),
                       [](double a, double b) { return std::abs(a - b) < 1e-13; }),
           xs.end());
  return xs;
}

void fill_max(CheckSection& s, const std::vector<double>& dev_at) {
  for (std::size_t i = 0; i < s.gains.size(); ++i) {
    if (s.gains[i] > s.max_gain) {
      s.max_gain = s.gains[i];
      const std::size_t per_row = s.grid.size();
      s.worst_type = s.grid[i % per_row];
      s.worst_deposit = dev_at[i];
    }
  }
}

}  // namespace

CheckSection check_bidder1(const StrategyProfile& profile, int type_grid,
                           int dev_grid, Execution exec) {
  if (type_grid < 20 || dev_grid < 100) {
    throw std::invalid_argument("check_bidder1: grids must be >= 20 x 100");
  }
  CheckSection out;
  const double db = profile.dbar();
  std::vector<double> cand;
  cand.reserve(static_cast<std::size_t>(dev_grid) + 16);
  for (int j = 0; j <= dev_grid; ++j) {
    cand.push_back(db * static_cast<double>(j) / dev_grid);
  }
  for (double p : profile.deposit_probes()) {
    if (p >= 0.0 && p <= db) cand.push_back(p);
  }
  cand = sorted_unique(std::move(cand));

  std::vector<Bidder2Slice> slices(cand.size());
  for (std::size_t j = 0; j < cand.size(); ++j) {
    slices[j] = profile.bidder2_slice(cand[j]);
  }

  out.grid.resize(static_cast<std::size_t>(type_grid));
  out.gains.assign(out.grid.size(), 0.0);
  std::vector<double> best_dev(out.grid.size(), 0.0);
  const Distribution& dist = profile.dist();
  const double cost = profile.cost();

  const auto run_type = [&](int i) {
    const double v1 = (i + 0.5) / type_grid;
    out.grid[static_cast<std::size_t>(i)] = v1;
    const double prescribed = profile.bidder1_deposit(v1);
    const double base = bidder1_expected_payoff(profile, v1, prescribed);
    std::size_t best_j = 0;
    double best = -1e300;
    for (std::size_t j = 0; j < cand.size(); ++j) {
      const double val =
          bidder1_payoff_vs_slice(dist, cost, v1, cand[j], slices[j]);
      if (val > best) {
        best = val;
        best_j = j;
      }
    }
    const double lo = cand[best_j > 0 ? best_j - 1 : 0];
    const double hi = cand[std::min(cand.size() - 1, best_j + 1)];
    const auto h = [&](double d1) {
      return bidder1_payoff_vs_slice(dist, cost, v1, d1,
                                     profile.bidder2_slice(d1));
    };
    if (hi > lo) {
      const MaximizeResult r = maximize_1d(h, lo, hi, 16, 1e-8);
      if (r.max > best) {
        best = r.max;
        best_dev[static_cast<std::size_t>(i)] = r.argmax;
      } else {
        best_dev[static_cast<std::size_t>(i)] = cand[best_j];
      }
    } else {
      best_dev[static_cast<std::size_t>(i)] = cand[best_j];
    }
    out.gains[static_cast<std::size_t>(i)] = best - base;
  };

  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < type_grid; ++i) run_type(i);
  } else {
    for (int i = 0; i < type_grid; ++i) run_type(i);
  }
  fill_max(out, best_dev);
  return out;
}

CheckSection check_bidder2(const StrategyProfile& profile, int v2_grid,
                           int dev_grid, Execution exec) {
  if (v2_grid < 20 || dev_grid < 100) {
    throw std::invalid_argument("check_bidder2: grids must be >= 20 x 100");
  }
  CheckSection out;
  const Distribution& dist = profile.dist();
  const double cost = profile.cost();

  std::vector<double> probes = profile.deposit_probes();
  for (int q = 0; q < 12; ++q) {  // on-path deposits across the type space
    const double v = dist.inverse_cdf((q + 0.5) / 12.0);
    probes.push_back(profile.bidder1_deposit(v));
  }
  std::vector<double> d1s;
  for (double p : probes) {
    if (p >= 0.0 && p <= profile.dbar()) d1s.push_back(p);
  }
  d1s = sorted_unique(std::move(d1s));

  std::vector<Bidder2Slice> slices(d1s.size());
  std::vector<Belief> beliefs;
  beliefs.reserve(d1s.size());
  for (std::size_t a = 0; a < d1s.size(); ++a) {
    slices[a] = profile.bidder2_slice(d1s[a]);
    beliefs.push_back(profile.belief(d1s[a]));
  }

  out.d1_probes = d1s;
  out.grid.resize(static_cast<std::size_t>(v2_grid));
  for (int b = 0; b < v2_grid; ++b) {
    out.grid[static_cast<std::size_t>(b)] = (b + 0.5) / v2_grid;
  }
  const std::size_t pairs = d1s.size() * out.grid.size();
  out.gains.assign(pairs, 0.0);
  std::vector<double> best_dev(pairs, 0.0);

  const auto run_pair = [&](std::size_t k) {
    const std::size_t a = k / out.grid.size();
    const std::size_t b = k % out.grid.size();
    const double d1 = d1s[a];
    const double v2 = out.grid[b];
    const Bidder2Slice& slice = slices[a];
    const double prescribed =
        v2 >= slice.entry_threshold ? slice.bid(v2) : 0.0;
    const double base =
        bidder2_expected_payoff(beliefs[a], dist, cost, v2, d1, prescribed);
    const double dmax = std::min(1.0, d1);
    double best = base;
    double at = prescribed;
    if (dmax > 0.0) {
      const auto h = [&](double d2) {
        return bidder2_expected_payoff(beliefs[a], dist, cost, v2, d1, d2);
      };
      std::size_t best_j = 0;
      double grid_best = -1e300;
      for (int j = 0; j <= dev_grid; ++j) {
        const double d2 = dmax * static_cast<double>(j) / dev_grid;
        const double val = h(d2);
        if (val > grid_best) {
          grid_best = val;
          best_j = static_cast<std::size_t>(j);
        }
      }
      const double lo =
          dmax * static_cast<double>(best_j > 0 ? best_j - 1 : 0) / dev_grid;
      const double hi =
          dmax *
          static_cast<double>(std::min<std::size_t>(
              static_cast<std::size_t>(dev_grid), best_j + 1)) /
          dev_grid;
      MaximizeResult r = maximize_1d(h, lo, hi, 16, 1e-9);
      const double cand_best = std::max(grid_best, r.max);
      if (cand_best > best) {
        best = cand_best;
        at = r.max >= grid_best ? r.argmax
                                : dmax * static_cast<double>(best_j) / dev_grid;
      }
    }
    out.gains[k] = best - base;
    best_dev[k] = at;
  };

  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(pairs); ++k) {
      run_pair(static_cast<std::size_t>(k));
    }
  } else {
    for (std::size_t k = 0; k < pairs; ++k) run_pair(k);
  }
  fill_max(out, best_dev);
  return out;
}

double check_bayes_consistency(const StrategyProfile& profile, int sample_n) {
  if (!profile.sequential_game()) return 0.0;
  const Distribution& dist = profile.dist();
  double worst = 0.0;
  const auto regions = profile.type_regions();
  for (const auto& region : regions) {
    if (region.kind == TypeRegion::Kind::Separating) {
      const int n = std::max(2, sample_n / static_cast<int>(regions.size()));
      for (int i = 0; i < n; ++i) {
        const double v = region.lo + (region.hi - region.lo) * (i + 0.5) / n;
        const Belief b = profile.belief(profile.bidder1_deposit(v));
        if (b.kind != Belief::Kind::PointMass) {
          worst = std::max(worst, 1.0);
        } else {
          worst = std::max(worst, std::abs(b.location - v));
        }
      }
    } else {
      // Out regions pool at deposit 0, Pooled regions at the pool deposit;
      // Bayes requires the prior truncated to the region either way.
      const double mid = 0.5 * (region.lo + region.hi);
      const double d1 = profile.bidder1_deposit(mid);
      const Belief b = profile.belief(d1);
      if (b.kind != Belief::Kind::TruncatedPrior) {
        worst = std::max(worst, 1.0);
        continue;
      }
      const double mass_expected = dist.cdf(region.hi) - dist.cdf(region.lo);
      const double mass_belief = dist.cdf(b.hi) - dist.cdf(b.lo);
      for (int q = 1; q <= 20; ++q) {
        const double x = region.lo + (region.hi - region.lo) * q / 21.0;
        const double expected =
            (dist.cdf(x) - dist.cdf(region.lo)) / mass_expected;
        const double got =
            (dist.cdf(std::clamp(x, b.lo, b.hi)) - dist.cdf(b.lo)) / mass_belief;
        worst = std::max(worst, std::abs(expected - got));
      }
    }
  }
  return worst;
}

VerificationReport verify_profile(const StrategyProfile& profile, double eps,
                                  int type_grid, int dev_grid, Execution exec) {
  VerificationReport rep;
  rep.profile = profile.name();
  rep.cost = profile.cost();
  rep.eps = eps;
  rep.bidder1 = check_bidder1(profile, type_grid, dev_grid, exec);
  rep.bidder2 = check_bidder2(profile, type_grid, dev_grid, exec);
  rep.belief_residual = check_bayes_consistency(profile, 50);
  rep.pass = rep.bidder1.max_gain <= eps && rep.bidder2.max_gain <= eps;
  return rep;
}

namespace {
void write_section(JsonWriter& w, const CheckSection& s, bool with_probes) {
  w.obj_open();
  w.kv("max_gain", s.max_gain);
  w.kv("worst_type", s.worst_type);
  w.kv("worst_deviation", s.worst_deposit);
  w.key("grid").arr_open();
  for (double g : s.grid) w.num(g);
  w.arr_close();
  if (with_probes) {
    w.key("d1_probes").arr_open();
    for (double g : s.d1_probes) w.num(g);
    w.arr_close();
  }
  w.key("gains").arr_open();
  for (double g : s.gains) w.num(g);
  w.arr_close();
  w.obj_close();
}
}  // namespace

std::string report_to_json(const VerificationReport& rep) {
  JsonWriter w;
  w.obj_open();
  w.kv("profile", rep.profile);
  w.kv("cost", rep.cost);
  w.kv("eps", rep.eps);
  w.key("bidder1");
  write_section(w, rep.bidder1, false);
  w.key("bidder2");
  write_section(w, rep.bidder2, true);
  w.kv("belief_residual", rep.belief_residual);
  w.kv("pass", rep.pass);
  w.obj_close();
  std::string s = w.take();
  s.push_back('\n');
  return s;
}

}  // namespace lockup
