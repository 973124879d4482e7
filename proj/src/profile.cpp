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

#include "lockup/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lockup/pooling.hpp"
#include "lockup/simultaneous.hpp"

namespace lockup {

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::Simultaneous: return "simultaneous";
    case Regime::SequentialSqrt: return "sequential-sqrt";
    case Regime::SequentialUniform: return "sequential-uniform";
    case Regime::Pooling: return "pooling";
  }
  return "?";
}

Regime parse_regime(const std::string& name, const std::string& dist_name) {
  if (name == "simultaneous") return Regime::Simultaneous;
  if (name == "sequential-sqrt") return Regime::SequentialSqrt;
  if (name == "sequential-uniform") return Regime::SequentialUniform;
  if (name == "pooling") return Regime::Pooling;
  if (name == "sequential") {
    if (dist_name == "sqrt") return Regime::SequentialSqrt;
    if (dist_name == "uniform") return Regime::SequentialUniform;
    throw std::invalid_argument(
        "regime 'sequential' needs --dist sqrt or --dist uniform");
  }
  throw std::invalid_argument("unknown regime '" + name + "'");
}

double StrategyProfile::bidder1_bid(double v1) const {
  return std::min(v1, bidder1_deposit(v1));
}

namespace {

class SimultaneousProfile final : public StrategyProfile {
public:
  SimultaneousProfile(const Distribution& dist, double cost, double step)
      : eq_(solve_simultaneous(dist, cost, step)),
        name_("simultaneous/" + dist.name()) {}

  const std::string& name() const override { return name_; }
  const Distribution& dist() const override { return eq_.dist; }
  double cost() const override { return eq_.cost; }
  double dbar() const override { return 4.0; }

  double bidder1_deposit(double v1) const override { return eq_.deposit.eval(v1); }

  Bidder2Slice bidder2_slice(double) const override {
    // depositing is simultaneous: the opponent's schedule ignores d1
    Bidder2Slice s;
    s.entry_threshold = 0.0;
    const Curve* curve = &eq_.deposit;
    s.bid = [curve](double v2) { return curve->eval(v2); };
    return s;
  }

  Belief belief(double) const override { return Belief::truncated(0.0, 1.0); }

  std::vector<TypeRegion> type_regions() const override {
    return {{0.0, 1.0, TypeRegion::Kind::Separating}};
  }

  std::vector<double> deposit_probes() const override {
    const double top = eq_.deposit.eval(1.0);
    return {0.0, 0.25 * top, 0.5 * top, top, 1.0, dbar()};
  }

  bool sequential_game() const override { return false; }

private:
  SimultaneousEquilibrium eq_;
  std::string name_;
};

class SqrtSeparatingProfile final : public StrategyProfile {
public:
  SqrtSeparatingProfile(const Distribution& dist, double cost)
      : dist_(dist), eq_(cost), name_("sequential-sqrt") {}

  const std::string& name() const override { return name_; }
  const Distribution& dist() const override { return dist_; }
  double cost() const override { return eq_.cost(); }

  double bidder1_deposit(double v1) const override { return eq_.bidder1_deposit(v1); }

  Bidder2Slice bidder2_slice(double d1) const override {
    Bidder2Slice s;
    s.entry_threshold = eq_.entry_threshold(d1);
    const double p = eq_.entrant_bid(d1);
    s.bid = [p](double) { return p; };
    return s;
  }

  Belief belief(double d1) const override { return eq_.belief(d1); }

  std::vector<TypeRegion> type_regions() const override {
    return {{0.0, eq_.pool_threshold(), TypeRegion::Kind::Separating},
            {eq_.pool_threshold(), 1.0, TypeRegion::Kind::Pooled}};
  }

  std::vector<double> deposit_probes() const override {
    const double s = eq_.switch_point(), top = eq_.top_deposit();
    return {0.0,       0.5 * s, s,          2.0 * s,      eq_.bidder1_deposit(0.3),
            eq_.bidder1_deposit(0.6), top,  1.05 * top,   0.5 * (top + dbar()),
            dbar()};
  }

private:
  Distribution dist_;
  SqrtSeparating eq_;
  std::string name_;
};

class UniformConditionalProfile final : public StrategyProfile {
public:
  UniformConditionalProfile(const Distribution& dist, double cost)
      : dist_(dist), eq_(cost), name_("sequential-uniform") {}

  const std::string& name() const override { return name_; }
  const Distribution& dist() const override { return dist_; }
  double cost() const override { return eq_.cost(); }

  double bidder1_deposit(double v1) const override { return eq_.bidder1_deposit(v1); }

  Bidder2Slice bidder2_slice(double d1) const override {
    Bidder2Slice s;
    s.entry_threshold = eq_.entry_threshold(d1);
    const double p = eq_.entrant_bid(d1);
    s.bid = [p](double) { return p; };
    return s;
  }

  Belief belief(double d1) const override { return eq_.belief(d1); }

  std::vector<TypeRegion> type_regions() const override {
    return {{0.0, eq_.entry_point(), TypeRegion::Kind::Out},
            {eq_.entry_point(), eq_.pool_threshold(), TypeRegion::Kind::Separating},
            {eq_.pool_threshold(), 1.0, TypeRegion::Kind::Pooled}};
  }

  std::vector<double> deposit_probes() const override {
    const double u = eq_.entry_point(), top = eq_.top_deposit();
    return {0.0,       0.5 * u, u,          2.0 * u,    eq_.bidder1_deposit(0.5),
            eq_.bidder1_deposit(0.7), top,  1.05 * top, 0.5 * (top + dbar()),
            dbar()};
  }

private:
  Distribution dist_;
  UniformConditional eq_;
  std::string name_;
};

class PoolingProfile final : public StrategyProfile {
public:
  PoolingProfile(const Distribution& dist, double cost)
      : dist_(dist), params_(solve_marginal_types(cost)), name_("pooling") {}

  const std::string& name() const override { return name_; }
  const Distribution& dist() const override { return dist_; }
  double cost() const override { return params_.cost; }
  double dbar() const override { return params_.dbar; }

  const PoolingParams& params() const { return params_; }

  double bidder1_deposit(double v1) const override {
    return pooling_bidder1_deposit(params_, v1);
  }

  Bidder2Slice bidder2_slice(double d1) const override {
    if (d1 == 1.0) {  // on-path pool: entry threshold is the solved v
      Bidder2Slice s;
      s.entry_threshold = params_.v;
      const double k = 2.0 * params_.cost * (1.0 - params_.u * params_.u);
      s.bid = [k](double v2) {
        return 0.5 * (v2 + std::sqrt(std::max(0.0, v2 * v2 - k)));
      };
      return s;
    }
    return pooling_slice(params_, d1);
  }

  Belief belief(double d1) const override { return pooling_belief(params_, d1); }

  std::vector<TypeRegion> type_regions() const override {
    return {{0.0, params_.u, TypeRegion::Kind::Out},
            {params_.u, 1.0, TypeRegion::Kind::Pooled}};
  }

  std::vector<double> deposit_probes() const override {
    const double u = params_.u;
    return {0.0, 0.5 * u, u, 0.5 * (u + 1.0), 0.9, 1.0, 1.5, dbar()};
  }

private:
  Distribution dist_;
  PoolingParams params_;
  std::string name_;
};

class ScaledProfile final : public StrategyProfile {
public:
  ScaledProfile(std::unique_ptr<StrategyProfile> base, double scale)
      : base_(std::move(base)),
        scale_(scale),
        name_(base_->name() + "+scale=" + std::to_string(scale)) {}

  const std::string& name() const override { return name_; }
  const Distribution& dist() const override { return base_->dist(); }
  double cost() const override { return base_->cost(); }
  double dbar() const override { return base_->dbar(); }

  double bidder1_deposit(double v1) const override {
    return scale_ * base_->bidder1_deposit(v1);
  }

  Bidder2Slice bidder2_slice(double d1) const override {
    return base_->bidder2_slice(d1);
  }
  Belief belief(double d1) const override { return base_->belief(d1); }
  std::vector<TypeRegion> type_regions() const override {
    return base_->type_regions();
  }
  std::vector<double> deposit_probes() const override {
    return base_->deposit_probes();
  }
  bool sequential_game() const override { return base_->sequential_game(); }

private:
  std::unique_ptr<StrategyProfile> base_;
  double scale_;
  std::string name_;
};

void require_alpha(const Distribution& dist, double alpha, const char* regime) {
  if (dist.alpha() != alpha) {
    throw std::invalid_argument(std::string(regime) + " requires the " +
                                Distribution(alpha).name() + " distribution");
  }
}

}  // namespace

std::unique_ptr<StrategyProfile> make_profile(Regime regime,
                                              const Distribution& dist,
                                              double cost, double ode_step) {
  switch (regime) {
    case Regime::Simultaneous:
      return std::make_unique<SimultaneousProfile>(dist, cost, ode_step);
    case Regime::SequentialSqrt:
      require_alpha(dist, 0.5, "sequential-sqrt");
      return std::make_unique<SqrtSeparatingProfile>(dist, cost);
    case Regime::SequentialUniform:
      require_alpha(dist, 1.0, "sequential-uniform");
      return std::make_unique<UniformConditionalProfile>(dist, cost);
    case Regime::Pooling:
      require_alpha(dist, 2.0, "pooling");
      return std::make_unique<PoolingProfile>(dist, cost);
  }
  throw std::invalid_argument("make_profile: bad regime");
}

std::unique_ptr<StrategyProfile> make_scaled_profile(
    std::unique_ptr<StrategyProfile> base, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
  return std::make_unique<ScaledProfile>(std::move(base), scale);
}

}  // namespace lockup
