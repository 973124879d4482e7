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
#include <stdexcept>
#include <vector>

#include "lockup/numerics.hpp"
#include "lockup/simultaneous.hpp"

using namespace lockup;

namespace {
double uniform_closed(double v, double c) {
  return v - c * (1.0 - std::exp(-v / c));
}
}  // namespace

TEST_CASE("uniform preset uses the closed form") {
  const auto eq = solve_simultaneous(Distribution::uniform(), 0.15);
  CHECK(eq.eval_deposit(0.5) == doctest::Approx(uniform_closed(0.5, 0.15)).epsilon(1e-12));
  CHECK(eq.eval_deposit(0.5) == doctest::Approx(0.355351).epsilon(1e-6));
  CHECK(eq.eval_deposit(1.0) == doctest::Approx(0.850190895).epsilon(1e-8));
  CHECK(eq.eval_deposit(0.0) == 0.0);
  CHECK_THROWS_AS(eq.eval_deposit(1.5), std::domain_error);
}

TEST_CASE("ODE path reproduces the uniform closed form for several costs") {
  for (double c : {0.05, 0.15, 0.5}) {
    const FocSolution sol = solve_foc_ode(Distribution::uniform(), c, 1e-4);
    double worst = 0.0;
    for (std::size_t i = 0; i < sol.curve.size(); ++i) {
      worst = std::max(worst, std::abs(sol.curve.ys()[i] -
                                       uniform_closed(sol.curve.xs()[i], c)));
    }
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("printed FOC residuals for quadratic and sqrt") {
  const FocSolution q = solve_foc_ode(Distribution::quadratic(), 0.15, 1e-4);
  CHECK(max_foc_residual(q, Distribution::quadratic(), 0.15, 100) < 1e-6);
  const FocSolution s = solve_foc_ode(Distribution::sqrt_family(), 0.15, 1e-4);
  CHECK(max_foc_residual(s, Distribution::sqrt_family(), 0.15, 100) < 1e-6);

  SUBCASE("spot values, frozen from the solved curves") {
    CHECK(q.curve.eval(0.5) == doctest::Approx(0.311889935).epsilon(1e-6));
    CHECK(q.curve.eval(1.0) == doctest::Approx(0.917101363).epsilon(1e-6));
    CHECK(s.curve.eval(0.5) == doctest::Approx(0.332464394).epsilon(1e-6));
    CHECK(s.curve.eval(1.0) == doctest::Approx(0.744942740).epsilon(1e-6));
  }
}

TEST_CASE("deposit schedules shade bids and stay monotone") {
  for (const auto& d : {Distribution::sqrt_family(), Distribution::uniform(),
                        Distribution::quadratic()}) {
    const auto eq = solve_simultaneous(d, 0.15);
    const auto& ys = eq.deposit.ys();
    const auto& xs = eq.deposit.xs();
    bool monotone = true, shaded = true;
    for (std::size_t i = 1; i < ys.size(); ++i) {
      monotone &= ys[i] > ys[i - 1];
      shaded &= ys[i] < xs[i];
    }
    CHECK(monotone);  // higher valuation always deposits strictly more
    CHECK(shaded);    // 0 <= d(v) < v for v > 0
    CHECK(eq.eval_deposit(0.8) > eq.eval_deposit(0.4));
  }
}

TEST_CASE("shading vanishes as cost goes to zero") {
  // uniform: gap is exactly c(1 - e^{-v/c}) <= c
  const auto u = solve_simultaneous(Distribution::uniform(), 1e-4);
  // quadratic and sqrt: march at the default step; the sqrt march runs in
  // s = sqrt(v), which keeps the step-to-timescale ratio stable at tiny c
  const auto q = solve_simultaneous(Distribution::quadratic(), 1e-4);
  const auto s = solve_simultaneous(Distribution::sqrt_family(), 1e-4);
  for (const auto* eq : {&u, &q, &s}) {
    double gap = 0.0;
    for (double v = 0.1; v <= 1.0; v += 0.01) {
      gap = std::max(gap, v - eq->eval_deposit(v));
    }
    CHECK(gap < 2e-3);
  }
}

TEST_CASE("reported-deposit best response is the truthful one") {
  // revelation-principle self-consistency at 20 types (quadratic, c = 0.15)
  const double c = 0.15;
  const Distribution dist = Distribution::quadratic();
  const auto eq = solve_simultaneous(dist, c);
  const auto& xs = eq.deposit.xs();
  const auto& ys = eq.deposit.ys();

  // cumulative integral of d(z) f(z) on the march grid (trapezoid)
  std::vector<double> cum(xs.size(), 0.0);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double fa = ys[i - 1] * dist.pdf(std::max(xs[i - 1], 1e-12));
    const double fb = ys[i] * dist.pdf(xs[i]);
    cum[i] = cum[i - 1] + 0.5 * (fa + fb) * (xs[i] - xs[i - 1]);
  }
  const Curve cum_curve(xs, cum);

  for (int k = 0; k < 20; ++k) {
    const double v = 0.05 + 0.9 * k / 19.0;
    const auto objective = [&](double w) {
      return dist.cdf(w) * v - cum_curve.eval(w) - c * eq.deposit.eval(w);
    };
    const auto r = maximize_1d(objective, 0.0, 1.0, 400, 1e-9);
    CHECK(std::abs(r.argmax - v) < 5e-3);
  }
}
