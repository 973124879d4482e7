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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace lockup {

/// Valuation prior on (0,1) drawn from the power family F(x) = x^alpha.
/// Covers the three presets used throughout: sqrt (alpha=1/2),
/// uniform (alpha=1) and quadratic (alpha=2).
class Distribution {
public:
  explicit Distribution(double alpha);

  static Distribution sqrt_family() { return Distribution(0.5); }
  static Distribution uniform() { return Distribution(1.0); }
  static Distribution quadratic() { return Distribution(2.0); }

  /// Parses "sqrt", "uniform", "quadratic" or "power:<alpha>".
  static Distribution from_name(std::string_view name);

  double alpha() const { return alpha_; }
  const std::string& name() const { return name_; }

  /// F(x) = x^alpha. Domain error outside [0,1].
  double cdf(double x) const;

  /// f(x) = alpha x^(alpha-1). Diverges at 0 for alpha < 1; callers must
  /// not evaluate there (domain error).
  double pdf(double x) const;

  /// Quantile, exact inverse of cdf on (0,1).
  double inverse_cdf(double p) const;

  /// E[v | lo <= v <= hi]; closed form for the power family.
  double conditional_mean(double lo, double hi) const;

  /// Unconditional mean alpha/(alpha+1).
  double mean() const { return alpha_ / (alpha_ + 1.0); }

  /// Partial first moment: integral of x f(x) over [a,b].
  double partial_moment(double a, double b) const;

private:
  double alpha_;
  std::string name_;
};

std::uint64_t split_mix64(std::uint64_t& state);

/// Uniform draw in (0,1) for a given (seed, index) pair. Stream-splitting by
/// index keeps Monte Carlo results independent of any parallel partitioning.
double unit_draw(std::uint64_t seed, std::uint64_t index);

/// Deterministic inverse-cdf sampler. Not shareable across tasks;
/// each task owns its own instance.
class Sampler {
public:
  Sampler(const Distribution& dist, std::uint64_t seed)
      : dist_(dist), seed_(seed), index_(0) {}

  double next() { return dist_.inverse_cdf(unit_draw(seed_, index_++)); }
  std::uint64_t index() const { return index_; }

private:
  Distribution dist_;
  std::uint64_t seed_;
  std::uint64_t index_;
};

}  // namespace lockup
