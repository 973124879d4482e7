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

#include "lockup/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace lockup {

Curve::Curve(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() != ys_.size() || xs_.size() < 2) {
    throw std::invalid_argument("Curve: need at least two knots");
  }
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    if (!(xs_[i] > xs_[i - 1])) {
      throw std::invalid_argument("Curve: x not strictly increasing");
    }
  }
}

double Curve::eval(double x) const {
  if (x <= xs_.front()) return ys_.front();
  if (x >= xs_.back()) return ys_.back();
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - xs_.begin());
  if (xs_[i - 1] == x) return ys_[i - 1];
  const double w = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
  return ys_[i - 1] + w * (ys_[i] - ys_[i - 1]);
}

Curve solve_ivp(const std::function<double(double, double)>& rhs, double x0,
                double y0, double x_end, double step) {
  if (!(step > 0.0) || !(x_end > x0)) {
    throw std::invalid_argument("solve_ivp: need step > 0 and x_end > x0");
  }
  const auto n = static_cast<std::size_t>(std::llround((x_end - x0) / step));
  std::vector<double> xs(n + 1), ys(n + 1);
  xs[0] = x0;
  ys[0] = y0;
  auto eval = [&rhs](double x, double y) {
    const double d = rhs(x, y);
    if (!std::isfinite(d)) {
      std::ostringstream msg;
      msg << "solve_ivp: non-finite rhs at (x=" << x << ", y=" << y << ")";
      throw std::runtime_error(msg.str());
    }
    return d;
  };
  double y = y0;
  for (std::size_t i = 1; i <= n; ++i) {
    const double x = x0 + static_cast<double>(i - 1) * step;
    const double k1 = eval(x, y);
    const double k2 = eval(x + 0.5 * step, y + 0.5 * step * k1);
    const double k3 = eval(x + 0.5 * step, y + 0.5 * step * k2);
    const double k4 = eval(x + step, y + step * k3);
    y += step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    xs[i] = x0 + static_cast<double>(i) * step;
    ys[i] = y;
  }
  xs[n] = x_end;  // kill round-off drift on the final knot
  return Curve(std::move(xs), std::move(ys));
}

double find_root(const std::function<double(double)>& g, RootBracket bracket) {
  double a = bracket.lo, b = bracket.hi;
  double fa = g(a), fb = g(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) {
    throw std::runtime_error("find_root: no sign change over bracket");
  }
  const double tol = bracket.tol;
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < 200; ++iter) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = g(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  throw std::runtime_error("find_root: iteration cap (200) reached");
}

namespace {

// Gauss-Kronrod 7-15 node/weight table on [-1,1]; all nodes interior.
struct GK15 {
  double value, error;
};

GK15 gk15(const std::function<double(double)>& h, double a, double b) {
  static const double nodes[8] = {
      0.0,
      0.405845151377397166906606412077,
      0.741531185599394439863864773281,
      0.949107912342758524526189684048,
      0.207784955007898467600689403773,
      0.586087235467691130294144838259,
      0.864864423359769072789712788641,
      0.991455371120812639206854697526};
  static const double wg[4] = {
      0.417959183673469387755102040816,
      0.381830050505118944950369775489,
      0.279705391489276667901467771424,
      0.129484966168869693270611432679};
  static const double wk[8] = {
      0.209482141084727828012999174892,
      0.190350578064785409913256402421,
      0.140653259715525918745189590510,
      0.063092092629978553290700663189,
      0.204432940075298892414161999235,
      0.169004726639267902826583426599,
      0.104790010322250183839876322541,
      0.022935322010529224963732008059};
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = h(mid);
  double g7 = wg[0] * f0;
  double k15 = wk[0] * f0;
  for (int i = 1; i < 4; ++i) {
    const double dx = half * nodes[i];
    const double fs = h(mid + dx) + h(mid - dx);
    g7 += wg[i] * fs;
    k15 += wk[i] * fs;
  }
  for (int i = 4; i < 8; ++i) {
    const double dx = half * nodes[i];
    k15 += wk[i] * (h(mid + dx) + h(mid - dx));
  }
  g7 *= half;
  k15 *= half;
  return {k15, std::abs(k15 - g7)};
}

struct Interval {
  double a, b, value, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& h, double lo,
                           double hi, double tol) {
  QuadratureResult out;
  if (lo == hi) return out;
  double sign = 1.0;
  if (lo > hi) {
    std::swap(lo, hi);
    sign = -1.0;
  }
  std::priority_queue<Interval> heap;
  const GK15 first = gk15(h, lo, hi);
  heap.push({lo, hi, first.value, first.error});
  double total = first.value, total_err = first.error;
  const int max_intervals = 4000;
  int used = 1;
  while (total_err > tol && used < max_intervals) {
    Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval exhausted at double precision
      heap.push({worst.a, worst.b, worst.value, 0.0});
      total_err -= worst.error;
      continue;
    }
    const GK15 left = gk15(h, worst.a, mid);
    const GK15 right = gk15(h, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push({worst.a, mid, left.value, left.error});
    heap.push({mid, worst.b, right.value, right.error});
    ++used;
  }
  out.value = sign * total;
  out.error_estimate = total_err;
  out.converged = total_err <= tol;
  return out;
}

MaximizeResult maximize_1d(const std::function<double(double)>& h, double lo,
                           double hi, int grid_n, double refine_tol) {
  if (grid_n < 16) {
    throw std::invalid_argument("maximize_1d: grid_n must be >= 16");
  }
  if (!(hi > lo)) return {lo, h(lo)};
  int best = 0;
  double best_val = -std::numeric_limits<double>::infinity();
  std::vector<double> xs(static_cast<std::size_t>(grid_n) + 1);
  for (int i = 0; i <= grid_n; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / grid_n;
    xs[static_cast<std::size_t>(i)] = x;
    const double v = h(x);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = xs[static_cast<std::size_t>(std::max(0, best - 1))];
  double b = xs[static_cast<std::size_t>(std::min(grid_n, best + 1))];
  const double inv_phi = 0.618033988749894848;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = h(x1), f2 = h(x2);
  for (int iter = 0; iter < 200 && (b - a) > refine_tol; ++iter) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = h(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = h(x1);
    }
  }
  const double xr = f1 > f2 ? x1 : x2;
  const double fr = std::max(f1, f2);
  if (fr > best_val) return {xr, fr};
  return {xs[static_cast<std::size_t>(best)], best_val};
}

}  // namespace lockup
