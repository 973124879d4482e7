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

#include "lockup/distribution.hpp"
#include "lockup/numerics.hpp"

namespace lockup {

/// Output of the symmetric first-order condition c d'(v) = f(v)(v - d(v)).
/// For alpha < 1 the march runs in s = F(v), where the equation becomes
/// c dd/ds = F^{-1}(s) - d and the density singularity at 0 drops out.
struct FocSolution {
  Curve curve;       // knots in v
  bool cdf_march;    // true: march variable was s = F(v) (uniform grid in s)
  double step;       // march-variable step
};

FocSolution solve_foc_ode(const Distribution& dist, double cost, double step);

/// Largest residual of the printed distribution-specific FOC
///   f(v) (v - d(v)) - c d'(v) = 0
/// at n interior check points, with d' estimated from the solution knots by a
/// five-point stencil in the march variable (independent of the integrator).
double max_foc_residual(const FocSolution& sol, const Distribution& dist,
                        double cost, int n_points);

/// Symmetric Bayes-Nash equilibrium of the simultaneous-depositing game.
/// Bids equal deposits; d(0) = 0 and d is strictly increasing.
struct SimultaneousEquilibrium {
  double cost;
  Distribution dist;
  Curve deposit;

  /// Interpolated d(v); domain error outside [0,1]. Bid = deposit.
  double eval_deposit(double v) const;
};

/// Solves the equilibrium deposit schedule. The uniform preset uses the
/// closed form v - c(1 - e^{-v/c}) directly; other exponents integrate the FOC.
SimultaneousEquilibrium solve_simultaneous(const Distribution& dist, double cost,
                                           double step = 1e-4);

}  // namespace lockup
