/*
   Copyright 2026 The monointerp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MONOINTERP_BOUNDS_HPP
#define MONOINTERP_BOUNDS_HPP

#include <vector>

#include "monointerp/nodes.hpp"
#include "monointerp/vanlinalg.hpp"

namespace monointerp {

/// Bernstein-ellipse parameter of z relative to an interval: with w the image
/// of z under the affine map of [a, b] onto [-1, 1], returns |w + sqrt(w^2 - 1)|
/// on the branch giving a value >= 1. Exactly 1 on the interval.
double rho_of_point(const Arc& interval_arc, Complex z);

/// Largest rho_of_point over the unit circle (4096-point scan refined by
/// golden-section search).
double rho_star_interval(const Arc& interval_arc);

/// rho_* of an arc: computed for intervals, the stored estimate for
/// parametric arcs. Throws std::invalid_argument when a parametric arc has none.
double rho_star_of(const Arc& arc);

/// (2 / pi) log(N + 1) + 1.
double leb_bound(Index n);

/// A positive quantity carried in log space.
struct LogScaled {
  double value = 0.0;   // exp(log_value), capped at kNormCap
  double log_value = 0.0;
  bool overflow = false;
};

/// rho_*^N Lambda.
LogScaled vinv_bound(Index n, double lambda, double rho_star);

/// 4 M / (rho - 1) rho^-N.
double chebyshev_convergence_bound(double max_on_ellipse, double rho, Index n);

/// normF + C (Lambda q^N + 2 rho_* sum_{j<N} q^j + 1) with q = rho_* / rho.
/// The geometric sum is evaluated through expm1 so q close to 1 loses nothing.
double coeff_norm_bound(double norm_f, double c_n, double rho, double rho_star, double lambda, Index n);

/// interp_err + 2 u gamma Lambda ||a||.
double apriori_error_bound(double interp_err, double gamma, double lambda, double coeff_norm,
                           double u = kUnitRoundoff);

/// alpha/(alpha+1) x <= xhat <= alpha/(alpha-1) x.
bool sandwich_check(double x_norm, double xhat_norm, double alpha);

/// Largest N <= 60 whose Vandermonde matrix on the arc's collocation points
/// has ||V^-1||_2 <= 1/u, found by increasing N until the first crossing.
Index threshold_order(const Arc& arc, NodeFamily family = NodeFamily::chebyshev2, double u = kUnitRoundoff);

struct BoundReport {
  Index N = 0;
  double lambda_measured = 1.0;
  double lambda_bound = 1.0;
  double rho_star = 0.0;
  double vinv_measured = 0.0;
  double vinv_bound = 0.0;
  double coeff_bound = 0.0;
  double apriori_bound = 0.0;
  double C_N = 0.0;
  double rho = 0.0;
};

/// Assembles the bound dossier of one solve. `interp_err` is the measured
/// interpolation error and `norm_f` the sup of |F| on the arc.
BoundReport bound_report(const CollocationSet& cs, const SolveReport& report, double interp_err, double norm_f,
                         double c_n, double rho, double rho_star, Index lebesgue_grid = 0);

/// Decay model err(N) ~ C rho^-N.
struct DecayFit {
  double C = 0.0;
  double rho = 1.0;
};

/// Least-squares slope of log(err) against N over samples with err > floor,
/// then C raised until C rho^-N dominates every sample used. rho is kept
/// above 1 + 1e-6. Needs two usable samples.
DecayFit fit_decay(const std::vector<Index>& orders, const std::vector<double>& errors, double floor);

}  // namespace monointerp

#endif  // MONOINTERP_BOUNDS_HPP
