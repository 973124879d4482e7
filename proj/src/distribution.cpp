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

#include "lockup/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace lockup {

namespace {
std::string family_name(double alpha) {
  if (alpha == 0.5) return "sqrt";
  if (alpha == 1.0) return "uniform";
  if (alpha == 2.0) return "quadratic";
  return "power:" + std::to_string(alpha);
}
}  // namespace

Distribution::Distribution(double alpha) : alpha_(alpha), name_(family_name(alpha)) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("Distribution: alpha must be positive and finite");
  }
}

Distribution Distribution::from_name(std::string_view name) {
  if (name == "sqrt") return sqrt_family();
  if (name == "uniform") return uniform();
  if (name == "quadratic") return quadratic();
  constexpr std::string_view prefix = "power:";
  if (name.substr(0, prefix.size()) == prefix) {
    const std::string arg(name.substr(prefix.size()));
    std::size_t used = 0;
    const double a = std::stod(arg, &used);
    if (used != arg.size()) {
      throw std::invalid_argument("Distribution: bad exponent '" + arg + "'");
    }
    return Distribution(a);
  }
  throw std::invalid_argument("Distribution: unknown name '" + std::string(name) +
                              "' (want sqrt|uniform|quadratic|power:<alpha>)");
}

double Distribution::cdf(double x) const {
  if (x < 0.0 || x > 1.0) {
    throw std::domain_error("cdf: x outside [0,1]");
  }
  return std::pow(x, alpha_);
}

double Distribution::pdf(double x) const {
  if (x < 0.0 || x > 1.0 || (x == 0.0 && alpha_ < 1.0)) {
    throw std::domain_error("pdf: x outside domain");
  }
  if (x == 0.0) return alpha_ == 1.0 ? 1.0 : 0.0;
  return alpha_ * std::pow(x, alpha_ - 1.0);
}

double Distribution::inverse_cdf(double p) const {
  if (p < 0.0 || p > 1.0) {
    throw std::domain_error("inverse_cdf: p outside [0,1]");
  }
  return std::pow(p, 1.0 / alpha_);
}

double Distribution::partial_moment(double a, double b) const {
  const double k = alpha_ + 1.0;
  return (alpha_ / k) * (std::pow(b, k) - std::pow(a, k));
}

double Distribution::conditional_mean(double lo, double hi) const {
  if (lo < 0.0 || hi > 1.0 || lo > hi) {
    throw std::domain_error("conditional_mean: bad interval");
  }
  if (hi - lo < 1e-12) {
    throw std::invalid_argument("conditional_mean: degenerate interval");
  }
  return partial_moment(lo, hi) / (cdf(hi) - cdf(lo));
}

std::uint64_t split_mix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_draw(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
  const std::uint64_t bits = split_mix64(s);
  double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
  if (u <= 0.0) u = 0x1.0p-53;  // keep draws inside the open interval
  return u;
}

}  // namespace lockup
