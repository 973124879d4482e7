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

#include <doctest.h>

#include <cmath>
#include <memory>
#include <vector>

#include "lockup/pooling.hpp"
#include "lockup/profile.hpp"
#include "lockup/sequential.hpp"
#include "lockup/verify.hpp"

using namespace lockup;

namespace {

// Truthful second-price play: everyone deposits and bids their valuation.
class TruthfulProfile final : public StrategyProfile {
public:
  TruthfulProfile(const Distribution& d, double cost) : dist_(d), cost_(cost) {}
  const std::string& name() const override { return name_; }
  const Distribution& dist() const override { return dist_; }
  double cost() const override { return cost_; }
  double bidder1_deposit(double v1) const override { return v1; }
  Bidder2Slice bidder2_slice(double) const override {
    Bidder2Slice s;
    s.entry_threshold = 0.0;
    s.bid = [](double v2) { return v2; };
    return s;
  }
  Belief belief(double) const override { return Belief::truncated(0.0, 1.0); }
  std::vector<TypeRegion> type_regions() const override {
    return {{0.0, 1.0, TypeRegion::Kind::Separating}};
  }
  std::vector<double> deposit_probes() const override { return {0.0, 0.5, 1.0}; }
  bool sequential_game() const override { return false; }

private:
  Distribution dist_;
  double cost_;
  std::string name_ = "truthful";
};

// Monte Carlo estimate of bidder 1's expected payoff against a slice.
struct McPayoff {
  double mean, stderr3;
};
McPayoff mc_payoff(const StrategyProfile& prof, double v1, double d1,
                   std::int64_t n, std::uint64_t seed) {
  const Bidder2Slice slice = prof.bidder2_slice(d1);
  const double b1 = std::min(v1, d1);
  const double c = prof.cost();
  double sum = 0.0, sumsq = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    const double v2 =
        prof.dist().inverse_cdf(unit_draw(seed, static_cast<std::uint64_t>(i)));
    double x = -c * d1;
    if (v2 < slice.entry_threshold) {
      if (b1 > 0.0) x += v1;  // wins at price 0
    } else {
      const double b2 = slice.bid(v2);
      if (b1 > b2) x += v1 - b2;
    }
    sum += x;
    sumsq += x * x;
  }
  const double mean = sum / static_cast<double>(n);
  const double var = sumsq / static_cast<double>(n) - mean * mean;
  return {mean, 3.0 * std::sqrt(std::max(0.0, var) / static_cast<double>(n))};
}

}  // namespace

TEST_CASE("bidder 2 payoff: point-mass arithmetic") {
  const Distribution u = Distribution::uniform();
  const Belief at_half = Belief::point(0.5);
  // d1 covers the believed bid, so b1 = 0.5
  CHECK(bidder2_expected_payoff(at_half, u, 0.15, 0.7, 0.9, 0.5) ==
        doctest::Approx(0.125).epsilon(1e-12));
  // bidding under it loses, deposit cost remains
  CHECK(bidder2_expected_payoff(at_half, u, 0.15, 0.7, 0.9, 0.49) ==
        doctest::Approx(-0.0735).epsilon(1e-12));
}

TEST_CASE("bidder 2 payoff: truncated prior reproduces the pooling profit") {
  const PoolingParams p = solve_marginal_types(0.22);
  const Distribution quad = Distribution::quadratic();
  const Belief pool = Belief::truncated(p.u, 1.0);
  for (double v2 : {0.88, 0.92, 1.0}) {
    const double d2 = interior_deposit(p, 1.0, v2);
    CHECK(bidder2_expected_payoff(pool, quad, p.cost, v2, 1.0, d2) ==
          doctest::Approx(pool_profit(p, v2, 1.0, d2)).epsilon(1e-9));
  }
  SUBCASE("the prescribed interior bid maximizes the belief payoff") {
    const double v2 = 0.95;
    double best = -1e300, at = 0.0;
    for (int j = 0; j <= 4000; ++j) {
      const double d2 = j / 4000.0;
      const double val = bidder2_expected_payoff(pool, quad, p.cost, v2, 1.0, d2);
      if (val > best) {
        best = val;
        at = d2;
      }
    }
    CHECK(std::abs(at - interior_deposit(p, 1.0, v2)) < 1e-3);
  }
}

TEST_CASE("bidder 2 payoff: low-deposit cutoff type is exactly indifferent") {
  const UniformConditional eq(0.15);
  const Distribution u = Distribution::uniform();
  const double d1 = 0.08;  // below c/(1+c)
  const double cutoff = (1.0 + 0.15) * d1;
  CHECK(bidder2_expected_payoff(eq.belief(d1), u, 0.15, cutoff, d1, d1) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("bidder 1 payoff: on-path values") {
  SUBCASE("any profile pays zero at a zero deposit") {
    for (auto regime : {Regime::SequentialUniform, Regime::Pooling}) {
      const Distribution d = regime == Regime::Pooling ? Distribution::quadratic()
                                                       : Distribution::uniform();
      const auto prof = make_profile(regime, d, regime == Regime::Pooling ? 0.22 : 0.15);
      CHECK(bidder1_expected_payoff(*prof, 0.4, 0.0) == doctest::Approx(0.0));
    }
  }
  SUBCASE("sqrt regime on-path payoff collapses to the threshold formula") {
    const double c = 0.15;
    const auto prof =
        make_profile(Regime::SequentialSqrt, Distribution::sqrt_family(), c);
    const SqrtSeparating eq(c);
    const double v1 = 0.5, d1 = eq.bidder1_deposit(0.5);
    // ties go to the entrant, so bidder 1 wins only when bidder 2 stays out
    const double expected = v1 * std::sqrt((1 + c) * v1) - c * d1;
    CHECK(bidder1_expected_payoff(*prof, v1, d1) ==
          doctest::Approx(expected).epsilon(1e-9));
  }
  SUBCASE("pooling on-path payoff matches its closed decomposition") {
    const auto prof = make_profile(Regime::Pooling, Distribution::quadratic(), 0.22);
    const PoolingParams p = solve_marginal_types(0.22);
    const double v1 = 0.9;
    // b1 = 0.9 beats every entrant bid (max is d2(1) = 0.886), so
    // payoff = F(v) v1 + int_v^1 (v1 - d2(x)) 2x dx - c
    const double K = 2 * p.cost * (1 - p.u * p.u);
    const auto anti = [K](double x) {
      return (x * x * x + std::pow(x * x - K, 1.5)) / 3.0;
    };
    const double expected = p.v * p.v * v1 + v1 * (1.0 - p.v * p.v) -
                            (anti(1.0) - anti(p.v)) - p.cost;
    CHECK(bidder1_expected_payoff(*prof, v1, 1.0) ==
          doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("payoff integration agrees with Monte Carlo on mixed probes") {
  struct Probe {
    Regime regime;
    double cost, v1, d1;
  };
  const std::vector<Probe> probes = {
      {Regime::Pooling, 0.22, 0.9, 1.0},  {Regime::Pooling, 0.22, 0.5, 0.8},
      {Regime::Pooling, 0.22, 1.0, 0.6},  {Regime::Pooling, 0.22, 0.35, 1.2},
      {Regime::SequentialSqrt, 0.15, 0.5, 0.86},
      {Regime::SequentialSqrt, 0.15, 0.8, 0.3},
      {Regime::SequentialSqrt, 0.15, 0.3, 2.0},
      {Regime::SequentialUniform, 0.15, 0.5, 1.02},
      {Regime::SequentialUniform, 0.15, 0.9, 1.5},
      {Regime::SequentialUniform, 0.15, 0.2, 0.5},
  };
  std::uint64_t seed = 4242;
  for (const auto& pr : probes) {
    const Distribution d = pr.regime == Regime::Pooling ? Distribution::quadratic()
                           : pr.regime == Regime::SequentialSqrt
                               ? Distribution::sqrt_family()
                               : Distribution::uniform();
    const auto prof = make_profile(pr.regime, d, pr.cost);
    const double exact = bidder1_expected_payoff(*prof, pr.v1, pr.d1);
    const McPayoff mc = mc_payoff(*prof, pr.v1, pr.d1, 400000, seed++);
    CHECK(std::abs(exact - mc.mean) <= std::max(mc.stderr3, 1e-6));
  }
}

TEST_CASE("truthful play is optimal without deposit costs") {
  const TruthfulProfile prof(Distribution::uniform(), 0.0);
  const CheckSection sec = check_bidder1(prof, 20, 100, Execution::Serial);
  CHECK(sec.max_gain <= 1e-6);  // second-price truthfulness recovered
}

TEST_CASE("pooling profile verifies; a corrupted one does not") {
  const Distribution quad = Distribution::quadratic();
  auto prof = make_profile(Regime::Pooling, quad, 0.22);
  const VerificationReport rep = verify_profile(*prof, 1e-3, 24, 100);
  CHECK(rep.pass);
  CHECK(rep.bidder1.max_gain <= 1e-3);
  CHECK(rep.bidder2.max_gain <= 1e-3);
  CHECK(rep.belief_residual < 1e-10);

  SUBCASE("deposit rule scaled by 1.5 springs the detector") {
    auto bad = make_scaled_profile(make_profile(Regime::Pooling, quad, 0.22), 1.5);
    const CheckSection sec = check_bidder1(*bad, 24, 100, Execution::Parallel);
    CHECK(sec.max_gain > 0.01);
  }
}

TEST_CASE("bayes consistency residuals") {
  CHECK(check_bayes_consistency(
            *make_profile(Regime::SequentialSqrt, Distribution::sqrt_family(), 0.15),
            50) < 1e-10);
  CHECK(check_bayes_consistency(
            *make_profile(Regime::SequentialUniform, Distribution::uniform(), 0.15),
            50) < 1e-10);
  CHECK(check_bayes_consistency(
            *make_profile(Regime::Pooling, Distribution::quadratic(), 0.22), 50) <
        1e-10);
}

TEST_CASE("profiles respect the bid/deposit bounds") {
  // 0 <= bid <= deposit <= dbar across the type space, for every regime
  std::vector<std::unique_ptr<StrategyProfile>> profiles;
  profiles.push_back(make_profile(Regime::Pooling, Distribution::quadratic(), 0.22));
  profiles.push_back(
      make_profile(Regime::SequentialSqrt, Distribution::sqrt_family(), 0.15));
  profiles.push_back(
      make_profile(Regime::SequentialUniform, Distribution::uniform(), 0.15));
  profiles.push_back(
      make_profile(Regime::Simultaneous, Distribution::quadratic(), 0.15));
  for (const auto& prof : profiles) {
    for (int i = 0; i <= 200; ++i) {
      const double v = i / 200.0;
      const double d = prof->bidder1_deposit(v);
      const double b = prof->bidder1_bid(v);
      CHECK(b >= 0.0);
      CHECK(b <= d);
      CHECK(d <= prof->dbar());
    }
  }
}

TEST_CASE("reports are deterministic and execution-invariant") {
  const auto prof = make_profile(Regime::Pooling, Distribution::quadratic(), 0.22);
  const auto a = verify_profile(*prof, 1e-3, 20, 100, Execution::Parallel);
  const auto b = verify_profile(*prof, 1e-3, 20, 100, Execution::Parallel);
  const auto c = verify_profile(*prof, 1e-3, 20, 100, Execution::Serial);
  CHECK(report_to_json(a) == report_to_json(b));
  CHECK(report_to_json(a) == report_to_json(c));
}
