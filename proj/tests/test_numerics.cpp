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

#include "lockup/numerics.hpp"

using namespace lockup;

TEST_CASE("curve interpolation") {
  Curve c({0.0, 0.5, 1.0}, {0.0, 2.0, 3.0});
  CHECK(c.eval(0.5) == 2.0);   // exact at knots
  CHECK(c.eval(0.25) == doctest::Approx(1.0));
  CHECK(c.eval(-1.0) == 0.0);  // clamped
  CHECK(c.eval(2.0) == 3.0);
  CHECK_THROWS_AS(Curve({0.0, 0.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("solve_ivp") {
  SUBCASE("constant slope") {
    const Curve c = solve_ivp([](double, double) { return 1.0; }, 0, 0, 1, 1e-3);
    CHECK(std::abs(c.eval(1.0) - 1.0) < 1e-12);
  }
  SUBCASE("linear relaxation matches its exponential solution") {
    const double cc = 0.15;
    const Curve c = solve_ivp([cc](double x, double y) { return (x - y) / cc; },
                              0, 0, 1, 1e-4);
    double worst = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const double x = c.xs()[i];
      worst = std::max(worst,
                       std::abs(c.ys()[i] - (x - cc * (1 - std::exp(-x / cc)))));
    }
    CHECK(worst < 1e-8);
  }
  SUBCASE("exponential decay") {
    const Curve c = solve_ivp([](double, double y) { return -y; }, 0, 1, 1, 1e-3);
    CHECK(std::abs(c.eval(1.0) - std::exp(-1.0)) < 1e-8);
  }
  SUBCASE("fourth-order convergence") {
    auto err = [](double h) {
      const Curve c = solve_ivp([](double, double y) { return -y; }, 0, 1, 1, h);
      return std::abs(c.eval(1.0) - std::exp(-1.0));
    };
    const double ratio = err(0.02) / err(0.01);
    CHECK(ratio > 12.0);
    CHECK(ratio < 20.0);
  }
  SUBCASE("non-finite rhs aborts with location") {
    CHECK_THROWS_AS(
        solve_ivp([](double x, double) { return 1.0 / (x - 0.5); }, 0, 0, 1, 0.25),
        std::runtime_error);
  }
}

TEST_CASE("find_root") {
  CHECK(find_root([](double x) { return x - 0.5; }, {0, 1}) ==
        doctest::Approx(0.5).epsilon(1e-12));
  // cube root of 0.22, oracle value from independent evaluation
  CHECK(find_root([](double x) { return x * x * x - 0.22; }, {0, 1}) ==
        doctest::Approx(0.6036810736797686).epsilon(1e-10));
  CHECK(find_root([](double x) { return std::cos(x) - x; }, {0, 1}) ==
        doctest::Approx(0.7390851332151607).epsilon(1e-10));

  SUBCASE("result stays inside the bracket") {
    const double r = find_root([](double x) { return std::sin(3 * x) - 0.4; },
                               {0.0, 0.5});
    CHECK(r >= 0.0);
    CHECK(r <= 0.5);
  }
  SUBCASE("no sign change is an error") {
    CHECK_THROWS_AS(find_root([](double x) { return x * x + 1; }, {0, 1}),
                    std::runtime_error);
  }
}

TEST_CASE("integrate") {
  CHECK(integrate([](double) { return 1.0; }, 0, 1, 1e-10).value ==
        doctest::Approx(1.0));
  CHECK(integrate([](double x) { return 2 * x; }, 0, 1, 1e-10).value ==
        doctest::Approx(1.0));
  SUBCASE("endpoint singularity x^{-1/2}/2") {
    const auto r =
        integrate([](double x) { return 0.5 / std::sqrt(x); }, 0, 1, 1e-7);
    CHECK(std::abs(r.value - 1.0) < 1e-6);
  }
  SUBCASE("tolerance warning is carried, not thrown") {
    // oscillatory integrand at an unreachable tolerance
    const auto r = integrate([](double x) { return std::sin(1.0 / (x + 1e-6)); },
                             0, 1, 1e-15);
    CHECK_FALSE(r.converged);
  }
  SUBCASE("orientation") {
    CHECK(integrate([](double x) { return 2 * x; }, 1, 0, 1e-10).value ==
          doctest::Approx(-1.0));
  }
}

TEST_CASE("maximize_1d") {
  const auto r1 = maximize_1d([](double x) { return -(x - 0.3) * (x - 0.3); },
                              0, 1, 64, 1e-10);
  CHECK(r1.argmax == doctest::Approx(0.3).epsilon(1e-7));

  const auto r2 = maximize_1d([](double x) { return x * (1 - x); }, 0, 1, 64, 1e-10);
  CHECK(r2.argmax == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(r2.max == doctest::Approx(0.25));

  SUBCASE("flat functions return the left endpoint") {
    const auto r = maximize_1d([](double) { return 7.0; }, 0.2, 0.9, 32, 1e-9);
    CHECK(r.argmax == doctest::Approx(0.2));
    CHECK(r.max == 7.0);
  }
  SUBCASE("never below the best grid sample") {
    const auto h = [](double x) { return std::sin(17 * x) + 0.3 * x; };
    const auto r = maximize_1d(h, 0, 1, 128, 1e-9);
    double grid_best = -1e300;
    for (int i = 0; i <= 128; ++i) grid_best = std::max(grid_best, h(i / 128.0));
    CHECK(r.max >= grid_best);
  }
  CHECK_THROWS_AS(maximize_1d([](double x) { return x; }, 0, 1, 8, 1e-6),
                  std::invalid_argument);
}
