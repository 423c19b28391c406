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

#ifndef MONOINTERP_PANEL_HPP
#define MONOINTERP_PANEL_HPP

#include "monointerp/nodes.hpp"
#include "monointerp/polycore.hpp"
#include "monointerp/vanlinalg.hpp"

namespace monointerp {

/// z = scale * s + shift.
struct AffineFrame {
  Complex scale{1.0, 0.0};
  Complex shift{0.0, 0.0};

  Complex to_global(Complex s) const { return scale * s + shift; }
  Complex to_local(Complex z) const { return (z - shift) / scale; }
};

/// The part of an arc with parameter in [t_lo, t_hi].
struct ArcPiece {
  Arc arc;
  double t_lo = -1.0;
  double t_hi = 1.0;

  explicit ArcPiece(Arc a, double lo = -1.0, double hi = 1.0);
  double param_at(double s) const;  // s in [-1, 1] -> t in [t_lo, t_hi]
  Complex point(double s) const { return arc.point(param_at(s)); }
};

/// Frame sending the chord of the piece onto [-1, 1]: the piece's endpoints
/// land on -1 and 1. For an interval piece this is exactly the affine
/// parameterization, so local nodes are the reference nodes themselves.
AffineFrame chord_frame(const ArcPiece& piece);

struct PanelInterpolant {
  AffineFrame frame;
  ArcPiece piece;
  CollocationSet nodes;  // local coordinates
  CVector values;        // F at the nodes
  MonomialPoly poly;     // in the local variable
  SolveReport report;
  double err_estimate = 0.0;
  double stagnation = 0.0;        // u * ||a||_2
  double max_local_radius = 0.0;  // max |s| over the nodes; > 1 flags a bulging arc piece
};

/// Fit a degree-(n_plus_1 - 1) monomial expansion of F on the piece, in local
/// coordinates. Requires 2 <= n_plus_1 <= 61.
PanelInterpolant fit_panel(const ComplexFunction& f, const ArcPiece& piece, Index n_plus_1,
                           NodeFamily family = NodeFamily::chebyshev2);
PanelInterpolant fit_panel(const ComplexFunction& f, const Arc& arc, Index n_plus_1,
                           NodeFamily family = NodeFamily::chebyshev2);

/// Rebuilds a panel around known local coefficients (frame and local nodes
/// regenerated, node values taken from the polynomial). Diagnostics other than
/// the stagnation level are left at zero.
PanelInterpolant assemble_panel(const ArcPiece& piece, MonomialPoly poly, NodeFamily family = NodeFamily::chebyshev2);

/// Horner evaluation at a global point. Points off the piece extrapolate.
Complex eval_panel(const PanelInterpolant& pi, Complex z_global);
/// Evaluation at the arc point with parameter t.
Complex eval_panel_at_param(const PanelInterpolant& pi, double t);
bool outside_panel(const PanelInterpolant& pi, double t);

/// Second-form barycentric evaluator. Interval second-kind Chebyshev sets use
/// the closed-form weights (-1)^j delta_j; every other set uses the general
/// product weights.
class BarycentricInterpolant {
 public:
  BarycentricInterpolant(const CVector& values, const CollocationSet& cs);
  Complex operator()(Complex z) const;
  const CVector& weights() const { return weights_; }

 private:
  CVector nodes_;
  CVector values_;
  CVector weights_;
};

BarycentricInterpolant barycentric_reference(const CVector& values, const CollocationSet& cs);

/// max |F - P| over validation_points uniform parameter intervals of the piece
/// (validation_points + 1 points, so refining by an integer factor nests the
/// grids). Requires validation_points >= 2 (N + 1).
double error_estimate(const PanelInterpolant& pi, const ComplexFunction& f, Index validation_points);

/// u * ||a||_2, the error floor of evaluating the monomial expansion.
double stagnation_estimate(const PanelInterpolant& pi);

}  // namespace monointerp

#endif  // MONOINTERP_PANEL_HPP
