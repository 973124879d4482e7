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

#include <functional>
#include <vector>

namespace lockup {

/// Sampled monotone-in-x function with linear interpolation between knots.
/// Evaluation at a knot returns its stored value exactly; evaluation outside
/// the knot range clamps to the boundary values.
class Curve {
public:
  Curve() = default;
  Curve(std::vector<double> xs, std::vector<double> ys);

  double eval(double x) const;
  std::size_t size() const { return xs_.size(); }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }
  double x_front() const { return xs_.front(); }
  double x_back() const { return xs_.back(); }

private:
  std::vector<double> xs_, ys_;
};

/// Classic fixed-step RK4 march from (x0, y0) to x_end.
/// Aborts with a diagnostic if the right-hand side turns non-finite.
Curve solve_ivp(const std::function<double(double, double)>& rhs, double x0,
                double y0, double x_end, double step);

struct RootBracket {
  double lo;
  double hi;
  double tol = 1e-12;
};

/// Brent's method (bisection with secant/inverse-quadratic acceleration).
/// Requires a sign change over the bracket; iteration cap 200.
double find_root(const std::function<double(double)>& g, RootBracket bracket);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;  // false carries the tolerance-not-reached warning
};

/// Globally adaptive Gauss-Kronrod 7-15 quadrature. The rule evaluates only
/// interior nodes, so integrable endpoint singularities are admissible.
QuadratureResult integrate(const std::function<double(double)>& h, double lo,
                           double hi, double tol);

struct MaximizeResult {
  double argmax = 0.0;
  double max = 0.0;
};

/// Coarse grid scan followed by golden-section refinement on the best cell.
/// Never returns a value below the best grid sample.
MaximizeResult maximize_1d(const std::function<double(double)>& h, double lo,
                           double hi, int grid_n, double refine_tol);

}  // namespace lockup
