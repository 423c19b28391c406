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

#include "monointerp/panel.hpp"

#include <algorithm>
#include <sstream>

namespace monointerp {

ArcPiece::ArcPiece(Arc a, double lo, double hi) : arc(std::move(a)), t_lo(lo), t_hi(hi) {
  if (!(lo >= -1.0 && hi <= 1.0 && lo < hi)) throw std::invalid_argument("ArcPiece: need -1 <= t_lo < t_hi <= 1");
}

double ArcPiece::param_at(double s) const {
  if (s == -1.0) return t_lo;
  if (s == 1.0) return t_hi;
  return 0.5 * (t_lo + t_hi) + 0.5 * (t_hi - t_lo) * s;
}

AffineFrame chord_frame(const ArcPiece& piece) {
  const Complex lo = piece.arc.point(piece.t_lo);
  const Complex hi = piece.arc.point(piece.t_hi);
  const Complex m = 0.5 * (hi - lo);
  if (m == Complex(0.0) || !is_finite(m)) throw std::invalid_argument("chord_frame: piece endpoints coincide");
  return AffineFrame{m, 0.5 * (hi + lo)};
}

namespace {

const double kUnitIntervalRhoStar = 1.0 + std::sqrt(2.0);

// Collocation set of the piece in local coordinates, plus the global images of its nodes.
std::pair<CollocationSet, CVector> local_nodes(const ArcPiece& piece, const AffineFrame& frame, Index n_plus_1,
                                               NodeFamily family) {
  const CollocationSet ref = collocation_points(n_plus_1, Arc::interval(-1.0, 1.0), family);
  CVector global(n_plus_1);
  for (Index j = 0; j < n_plus_1; ++j) global[j] = piece.point(ref.params()[j]);

  if (piece.arc.is_interval()) {
    Arc local = Arc::interval(-1.0, 1.0, kUnitIntervalRhoStar);
    return {CollocationSet(ref.nodes(), ref.params(), family, std::move(local)), std::move(global)};
  }
  CVector local_pts(n_plus_1);
  for (Index j = 0; j < n_plus_1; ++j) local_pts[j] = frame.to_local(global[j]);
  std::optional<double> rho;
  const bool identity = frame.scale == Complex(1.0) && frame.shift == Complex(0.0);
  if (piece.t_lo == -1.0 && piece.t_hi == 1.0 && identity) rho = piece.arc.rho_star();
  Arc local = Arc::parametric([piece, frame](double s) { return frame.to_local(piece.point(s)); }, rho,
                              piece.arc.as_parametric().samples_hint);
  return {CollocationSet(std::move(local_pts), ref.params(), family, std::move(local)), std::move(global)};
}

double max_error_on(const PanelInterpolant& pi, const ComplexFunction& f, const std::vector<double>& s_grid) {
  double err = 0.0;
  for (double s : s_grid) {
    const Complex z = pi.piece.point(s);
    const Complex fz = f(z);
    if (!is_finite(fz)) {
      std::ostringstream msg;
      msg << "F is not finite at z = " << z;
      throw NumericalError(msg.str());
    }
    err = std::max(err, std::abs(fz - eval_horner(pi.poly, pi.frame.to_local(z))));
  }
  return err;
}

}  // namespace

PanelInterpolant fit_panel(const ComplexFunction& f, const ArcPiece& piece, Index n_plus_1, NodeFamily family) {
  if (n_plus_1 < 2 || n_plus_1 > 61) throw std::invalid_argument("fit_panel: need 1 <= N <= 60");
  if (!f) throw std::invalid_argument("fit_panel: empty function");
  const AffineFrame frame = chord_frame(piece);
  auto [cs, global] = local_nodes(piece, frame, n_plus_1, family);

  CVector values(n_plus_1);
  for (Index j = 0; j < n_plus_1; ++j) {
    values[j] = f(global[j]);
    if (!is_finite(values[j])) {
      std::ostringstream msg;
      msg << "fit_panel: F is not finite at node " << j << " (z = " << global[j] << ")";
      throw NumericalError(msg.str());
    }
  }

  SolveReport report = solve_with_report(cs, values);
  MonomialPoly poly = report.coeffs;
  const double radius = cs.nodes().cwiseAbs().maxCoeff();
  PanelInterpolant pi{frame, piece, std::move(cs), std::move(values), std::move(poly), std::move(report), 0.0, 0.0,
                      radius};
  pi.stagnation = stagnation_estimate(pi);

  const Index grid = 10 * n_plus_1;
  std::vector<double> s_grid;
  s_grid.reserve(grid + n_plus_1);
  for (Index i = 0; i < grid; ++i) s_grid.push_back(-1.0 + 2.0 * double(i) / double(grid - 1));
  const RVector& s = pi.nodes.params();
  for (Index j = 0; j + 1 < n_plus_1; ++j) s_grid.push_back(0.5 * (s[j] + s[j + 1]));
  pi.err_estimate = max_error_on(pi, f, s_grid);
  return pi;
}

PanelInterpolant fit_panel(const ComplexFunction& f, const Arc& arc, Index n_plus_1, NodeFamily family) {
  return fit_panel(f, ArcPiece(arc), n_plus_1, family);
}

PanelInterpolant assemble_panel(const ArcPiece& piece, MonomialPoly poly, NodeFamily family) {
  const Index n_plus_1 = poly.size();
  if (n_plus_1 < 2 || n_plus_1 > 61) throw std::invalid_argument("assemble_panel: need 1 <= N <= 60");
  const AffineFrame frame = chord_frame(piece);
  auto [cs, global] = local_nodes(piece, frame, n_plus_1, family);
  CVector values(n_plus_1);
  for (Index j = 0; j < n_plus_1; ++j) values[j] = eval_horner(poly, cs.nodes()[j]);
  SolveReport report;
  report.coeffs = poly;
  const double radius = cs.nodes().cwiseAbs().maxCoeff();
  PanelInterpolant pi{frame, piece, std::move(cs), std::move(values), std::move(poly), std::move(report), 0.0, 0.0,
                      radius};
  pi.stagnation = stagnation_estimate(pi);
  return pi;
}

Complex eval_panel(const PanelInterpolant& pi, Complex z_global) {
  return eval_horner(pi.poly, pi.frame.to_local(z_global));
}

Complex eval_panel_at_param(const PanelInterpolant& pi, double t) { return eval_panel(pi, pi.piece.arc.point(t)); }

bool outside_panel(const PanelInterpolant& pi, double t) { return t < pi.piece.t_lo || t > pi.piece.t_hi; }

BarycentricInterpolant::BarycentricInterpolant(const CVector& values, const CollocationSet& cs)
    : nodes_(cs.nodes()), values_(values) {
  if (values.size() != cs.size()) throw std::invalid_argument("BarycentricInterpolant: |values| != |nodes|");
  const Index n = cs.size();
  if (cs.family() == NodeFamily::chebyshev2 && cs.arc().is_interval() && n >= 2) {
    weights_.resize(n);
    for (Index j = 0; j < n; ++j) weights_[j] = (j % 2 == 0) ? 1.0 : -1.0;
    weights_[0] *= 0.5;
    weights_[n - 1] *= 0.5;
  } else {
    weights_ = barycentric_weights(cs.nodes());
  }
}

Complex BarycentricInterpolant::operator()(Complex z) const {
  Complex num = 0.0, den = 0.0;
  for (Index j = 0; j < nodes_.size(); ++j) {
    const Complex d = z - nodes_[j];
    if (d == Complex(0.0)) return values_[j];
    const Complex c = weights_[j] / d;
    num += c * values_[j];
    den += c;
  }
  return num / den;
}

BarycentricInterpolant barycentric_reference(const CVector& values, const CollocationSet& cs) {
  return BarycentricInterpolant(values, cs);
}

double error_estimate(const PanelInterpolant& pi, const ComplexFunction& f, Index validation_points) {
  if (validation_points < 2 * pi.nodes.size())
    throw std::invalid_argument("error_estimate: need validation_points >= 2 (N + 1)");
  std::vector<double> s_grid(validation_points + 1);
  for (Index i = 0; i <= validation_points; ++i) s_grid[i] = -1.0 + 2.0 * double(i) / double(validation_points);
  s_grid.back() = 1.0;
  return max_error_on(pi, f, s_grid);
}

double stagnation_estimate(const PanelInterpolant& pi) { return kUnitRoundoff * coeff_norm2(pi.poly); }

}  // namespace monointerp
