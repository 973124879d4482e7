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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "lockup/distribution.hpp"
#include "lockup/numerics.hpp"

using namespace lockup;

TEST_CASE("cdf/pdf closed forms") {
  const auto q = Distribution::quadratic();
  const auto u = Distribution::uniform();
  const auto s = Distribution::sqrt_family();

  CHECK(q.cdf(0.5) == doctest::Approx(0.25));
  CHECK(u.cdf(0.3) == doctest::Approx(0.3));
  // inverse relation: F(x^2) = x for the sqrt family
  const double x = 0.757919;
  CHECK(s.cdf(x * x) == doctest::Approx(x).epsilon(1e-9));

  CHECK(u.pdf(0.7) == doctest::Approx(1.0));
  CHECK(q.pdf(0.5) == doctest::Approx(1.0));
  CHECK(s.pdf(0.25) == doctest::Approx(1.0));

  CHECK(q.cdf(0.0) == 0.0);
  CHECK(q.cdf(1.0) == 1.0);
  CHECK_THROWS_AS(q.cdf(1.5), std::domain_error);
  CHECK_THROWS_AS(q.cdf(-0.1), std::domain_error);
  CHECK_THROWS_AS(s.pdf(0.0), std::domain_error);  // density diverges at 0
}

TEST_CASE("pdf integrates to one (open rule handles the sqrt singularity)") {
  for (const auto& d : {Distribution::sqrt_family(), Distribution::uniform(),
                        Distribution::quadratic(), Distribution(0.73)}) {
    const auto r = integrate([&](double x) { return d.pdf(x); }, 0.0, 1.0, 1e-9);
    CHECK(std::abs(r.value - 1.0) < 1e-9);
  }
}

TEST_CASE("inverse_cdf round trip") {
  for (const auto& d : {Distribution::sqrt_family(), Distribution::uniform(),
                        Distribution::quadratic()}) {
    for (double x = 0.05; x < 1.0; x += 0.05) {
      CHECK(std::abs(d.inverse_cdf(d.cdf(x)) - x) < 1e-12);
    }
  }
}

TEST_CASE("conditional means") {
  const auto q = Distribution::quadratic();
  CHECK(Distribution::uniform().conditional_mean(0, 1) == doctest::Approx(0.5));
  CHECK(q.conditional_mean(0, 1) == doctest::Approx(2.0 / 3.0));
  // closed form vs direct quadrature of x f(x); frozen from that oracle
  CHECK(q.conditional_mean(0.382981, 1.0) ==
        doctest::Approx(0.7373711551886829).epsilon(1e-9));

  SUBCASE("unconditional mean identity") {
    for (const auto& d : {Distribution::sqrt_family(), Distribution::uniform(),
                          Distribution::quadratic(), Distribution(3.7)}) {
      CHECK(std::abs(d.conditional_mean(0, 1) - d.mean()) < 1e-12);
    }
  }

  SUBCASE("closed form matches adaptive quadrature on random intervals") {
    std::uint64_t seed = 911;
    for (int k = 0; k < 100; ++k) {
      const double a = 0.98 * unit_draw(seed, 2 * static_cast<std::uint64_t>(k));
      const double b =
          a + (1.0 - a) *
                  std::max(1e-3, unit_draw(seed, 2 * static_cast<std::uint64_t>(k) + 1));
      const auto& d = k % 2 ? Distribution::quadratic() : Distribution::sqrt_family();
      const auto num = integrate([&](double x) { return x * d.pdf(x); }, a, b, 1e-11);
      const double expected = num.value / (d.cdf(b) - d.cdf(a));
      CHECK(std::abs(d.conditional_mean(a, b) - expected) < 1e-9);
    }
  }

  CHECK_THROWS_AS(q.conditional_mean(0.5, 0.5), std::invalid_argument);
}

TEST_CASE("sampling: inverse transform, determinism, KS distance") {
  // u = 0.25 pushes through the quantile exactly
  CHECK(Distribution::quadratic().inverse_cdf(0.25) == doctest::Approx(0.5));
  CHECK(Distribution::sqrt_family().inverse_cdf(0.25) == doctest::Approx(0.0625));

  SUBCASE("same seed, same stream") {
    Sampler a(Distribution::quadratic(), 1234);
    Sampler b(Distribution::quadratic(), 1234);
    for (int i = 0; i < 64; ++i) CHECK(a.next() == b.next());
    Sampler a2(Distribution::quadratic(), 1234);
    Sampler c(Distribution::quadratic(), 1235);
    bool differs = false;
    for (int i = 0; i < 64; ++i) differs |= a2.next() != c.next();
    CHECK(differs);
  }

  SUBCASE("Kolmogorov-Smirnov distance under 0.01 at n = 1e5") {
    for (const auto& d : {Distribution::sqrt_family(), Distribution::uniform(),
                          Distribution::quadratic()}) {
      const int n = 100000;
      Sampler s(d, 20260810);
      std::vector<double> xs(static_cast<std::size_t>(n));
      for (auto& x : xs) x = s.next();
      std::sort(xs.begin(), xs.end());
      double ks = 0.0;
      for (int i = 0; i < n; ++i) {
        const double F = d.cdf(xs[static_cast<std::size_t>(i)]);
        ks = std::max(ks, std::abs(F - static_cast<double>(i) / n));
        ks = std::max(ks, std::abs(F - static_cast<double>(i + 1) / n));
      }
      CHECK(ks < 0.01);
    }
  }
}

TEST_CASE("name parsing") {
  CHECK(Distribution::from_name("sqrt").alpha() == 0.5);
  CHECK(Distribution::from_name("uniform").alpha() == 1.0);
  CHECK(Distribution::from_name("quadratic").alpha() == 2.0);
  CHECK(Distribution::from_name("power:1.5").alpha() == doctest::Approx(1.5));
  CHECK_THROWS_AS(Distribution::from_name("cauchy"), std::invalid_argument);
  CHECK_THROWS_AS(Distribution::from_name("power:-1"), std::invalid_argument);
}
