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

#include "monointerp/bounds.hpp"

#include <algorithm>
#include <limits>

namespace monointerp {

double rho_of_point(const Arc& interval_arc, Complex z) {
  const Interval& iv = interval_arc.as_interval();
  const Complex w = (2.0 * z - (iv.a + iv.b)) / (iv.b - iv.a);
  if (w.imag() == 0.0 && std::abs(w.real()) <= 1.0) return 1.0;
  const double r = std::abs(w + std::sqrt(w * w - 1.0));
  // The two branches multiply to 1.
  return std::max(r, 1.0 / r);
}

double rho_star_interval(const Arc& interval_arc) {
  constexpr int grid = 4096;
  auto on_circle = [&](double theta) { return rho_of_point(interval_arc, std::polar(1.0, theta)); };
  int best = 0;
  double best_value = 0.0;
  for (int k = 0; k < grid; ++k) {
    const double v = on_circle(2.0 * kPi * k / grid);
    if (v > best_value) best_value = v, best = k;
  }
  const double h = 2.0 * kPi / grid;
  double lo = (best - 1) * h, hi = (best + 1) * h;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = on_circle(x1), f2 = on_circle(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      lo = x1, x1 = x2, f1 = f2;
      x2 = lo + g * (hi - lo), f2 = on_circle(x2);
    } else {
      hi = x2, x2 = x1, f2 = f1;
      x1 = hi - g * (hi - lo), f1 = on_circle(x1);
    }
  }
  return std::max({best_value, f1, f2});
}

double rho_star_of(const Arc& arc) {
  if (arc.is_interval()) return arc.rho_star() ? *arc.rho_star() : rho_star_interval(arc);
  if (!arc.rho_star()) throw std::invalid_argument("rho_star_of: parametric arc carries no rho_star estimate");
  return *arc.rho_star();
}

double leb_bound(Index n) {
  if (n < 0) throw std::invalid_argument("leb_bound: N must be >= 0");
  return 2.0 / kPi * std::log(double(n) + 1.0) + 1.0;
}

LogScaled vinv_bound(Index n, double lambda, double rho_star) {
  if (n < 0 || !(lambda >= 1.0) || !(rho_star > 1.0))
    throw std::invalid_argument("vinv_bound: need N >= 0, lambda >= 1, rho_star > 1");
  LogScaled out;
  out.log_value = double(n) * std::log(rho_star) + std::log(lambda);
  if (out.log_value > std::log(kNormCap)) {
    out.value = kNormCap;
    out.overflow = true;
  } else {
    out.value = std::exp(out.log_value);
  }
  return out;
}

double chebyshev_convergence_bound(double max_on_ellipse, double rho, Index n) {
  if (!(rho > 1.0) || !(max_on_ellipse >= 0.0) || n < 0)
    throw std::invalid_argument("chebyshev_convergence_bound: need rho > 1, M >= 0, N >= 0");
  return 4.0 * max_on_ellipse / (rho - 1.0) * std::exp(-double(n) * std::log(rho));
}

double coeff_norm_bound(double norm_f, double c_n, double rho, double rho_star, double lambda, Index n) {
  if (!(rho > 1.0) || !(rho_star > 1.0)) throw std::invalid_argument("coeff_norm_bound: need rho, rho_star > 1");
  const double log_q = std::log(rho_star) - std::log(rho);
  const double nn = double(n);
  double sum;
  if (std::abs(log_q) < 1e-300) {
    sum = nn;
  } else {
    sum = std::expm1(nn * log_q) / std::expm1(log_q);
  }
  return norm_f + c_n * (lambda * std::exp(nn * log_q) + 2.0 * rho_star * sum + 1.0);
}

double apriori_error_bound(double interp_err, double gamma, double lambda, double coeff_norm, double u) {
  if (interp_err < 0.0 || gamma < 0.0 || lambda < 0.0 || coeff_norm < 0.0 || u < 0.0)
    throw std::invalid_argument("apriori_error_bound: arguments must be non-negative");
  return interp_err + 2.0 * u * gamma * lambda * coeff_norm;
}

bool sandwich_check(double x_norm, double xhat_norm, double alpha) {
  if (!(alpha > 1.0)) throw std::invalid_argument("sandwich_check: alpha must exceed 1");
  return alpha / (alpha + 1.0) * x_norm <= xhat_norm && xhat_norm <= alpha / (alpha - 1.0) * x_norm;
}

Index threshold_order(const Arc& arc, NodeFamily family, double u) {
  if (!(u > 0.0)) throw std::invalid_argument("threshold_order: u must be positive");
  for (Index n = 1; n <= 60; ++n) {
    const CollocationSet cs = collocation_points(n + 1, arc, family);
    const NormEstimate est = vandermonde_inv_norm2(cs.nodes());
    if (est.overflow || est.value > 1.0 / u) return n - 1;
  }
  return 60;
}

BoundReport bound_report(const CollocationSet& cs, const SolveReport& report, double interp_err, double norm_f,
                         double c_n, double rho, double rho_star, Index lebesgue_grid) {
  BoundReport br;
  br.N = cs.degree();
  const Index grid = std::max<Index>(lebesgue_grid, 30 * cs.size());
  br.lambda_measured = lebesgue_constant(cs, grid);
  br.lambda_bound = leb_bound(br.N);
  br.rho_star = rho_star;
  br.vinv_measured = report.norm_Vinv;
  br.vinv_bound = vinv_bound(br.N, br.lambda_measured, rho_star).value;
  br.coeff_bound = coeff_norm_bound(norm_f, c_n, rho, rho_star, br.lambda_measured, br.N);
  br.apriori_bound = apriori_error_bound(interp_err, report.gamma_est, br.lambda_measured,
                                         coeff_norm2(report.coeffs), report.unit_roundoff);
  br.C_N = c_n;
  br.rho = rho;
  return br;
}

DecayFit fit_decay(const std::vector<Index>& orders, const std::vector<double>& errors, double floor) {
  if (orders.size() != errors.size()) throw std::invalid_argument("fit_decay: size mismatch");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (errors[i] > floor && errors[i] > 0.0) xs.push_back(double(orders[i])), ys.push_back(std::log(errors[i]));
  if (xs.size() < 2) throw std::invalid_argument("fit_decay: fewer than two samples above the floor");
  const double n = double(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
  mx /= n, my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) sxy += (xs[i] - mx) * (ys[i] - my), sxx += (xs[i] - mx) * (xs[i] - mx);
  const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
  DecayFit fit;
  fit.rho = std::max(std::exp(-slope), 1.0 + 1e-6);
  const double log_rho = std::log(fit.rho);
  double log_c = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < xs.size(); ++i) log_c = std::max(log_c, ys[i] + xs[i] * log_rho);
  fit.C = std::exp(log_c);
  return fit;
}

}  // namespace monointerp
