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

#include "lockup/simultaneous.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace lockup {

FocSolution solve_foc_ode(const Distribution& dist, double cost, double step) {
  if (!(cost > 0.0)) throw std::invalid_argument("solve_foc_ode: cost must be > 0");
  const double a = dist.alpha();
  if (a >= 1.0) {
    // f is bounded; march directly in v: d' = f(v)(v - d)/c
    auto rhs = [&dist, cost](double v, double d) {
      return dist.pdf(v) * (v - d) / cost;
    };
    Curve c = solve_ivp(rhs, 0.0, 0.0, 1.0, step);
    return {std::move(c), false, step};
  }
  // alpha < 1: substitute s = F(v), v = s^{1/alpha}; then c dd/ds = v(s) - d
  auto rhs = [a, cost](double s, double d) {
    return (std::pow(s, 1.0 / a) - d) / cost;
  };
  Curve in_s = solve_ivp(rhs, 0.0, 0.0, 1.0, step);
  std::vector<double> xs(in_s.size()), ys(in_s.ys());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = std::pow(in_s.xs()[i], 1.0 / a);
  }
  xs.front() = 0.0;
  xs.back() = 1.0;
  return {Curve(std::move(xs), std::move(ys)), true, step};
}

double max_foc_residual(const FocSolution& sol, const Distribution& dist,
                        double cost, int n_points) {
  const auto& xs = sol.curve.xs();
  const auto& ys = sol.curve.ys();
  const std::size_t n = xs.size();
  const double h = sol.step;
  double worst = 0.0;
  for (int p = 1; p <= n_points; ++p) {
    const double v_target = static_cast<double>(p) / (n_points + 1);
    // locate the knot nearest the target; need two knots on each side
    std::size_t k;
    if (sol.cdf_march) {
      const double s = dist.cdf(v_target);
      k = static_cast<std::size_t>(std::llround(s / h));
    } else {
      k = static_cast<std::size_t>(std::llround(v_target / h));
    }
    k = std::max<std::size_t>(2, std::min(n - 3, k));
    const double dm = (-ys[k + 2] + 8.0 * ys[k + 1] - 8.0 * ys[k - 1] + ys[k - 2]) /
                      (12.0 * h);  // derivative in the march variable
    const double v = xs[k];
    const double dprime = sol.cdf_march ? dm * dist.pdf(v) : dm;
    const double res = dist.pdf(v) * (v - ys[k]) - cost * dprime;
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

SimultaneousEquilibrium solve_simultaneous(const Distribution& dist, double cost,
                                           double step) {
  if (!(cost > 0.0)) throw std::invalid_argument("solve_simultaneous: cost must be > 0");
  if (dist.alpha() == 1.0) {
    const auto n = static_cast<std::size_t>(std::llround(1.0 / step));
    std::vector<double> xs(n + 1), ys(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      const double v = static_cast<double>(i) * step;
      xs[i] = v;
      ys[i] = v - cost * (1.0 - std::exp(-v / cost));
    }
    xs.back() = 1.0;
    return {cost, dist, Curve(std::move(xs), std::move(ys))};
  }
  FocSolution sol = solve_foc_ode(dist, cost, step);
  return {cost, dist, std::move(sol.curve)};
}

double SimultaneousEquilibrium::eval_deposit(double v) const {
  if (v < 0.0 || v > 1.0) {
    throw std::domain_error("eval_deposit: v outside [0,1]");
  }
  return deposit.eval(v);
}

}  // namespace lockup
