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

#ifndef MONOINTERP_PIECEWISE_HPP
#define MONOINTERP_PIECEWISE_HPP

#include <iosfwd>
#include <vector>

#include "monointerp/panel.hpp"

namespace monointerp {

struct PiecewiseStats {
  Index panel_count = 0;
  Index max_depth = 0;
  Index total_solves = 0;
  Index coefficient_splits = 0;  // bisections made only to shrink u ||a||_2
};

/// Ordered panels whose parameter ranges partition [-1, 1] with shared
/// endpoints.
struct PiecewiseModel {
  Arc arc;
  double epsilon = 0.0;
  Index order = 0;
  NodeFamily family = NodeFamily::chebyshev2;
  std::vector<PanelInterpolant> panels;
  PiecewiseStats stats;
};

/// Subdivision gave up: the panel [t_lo, t_hi] at the depth limit still fails.
class MaxDepthError : public NumericalError {
 public:
  MaxDepthError(const std::string& what, double t_lo, double t_hi, double err_estimate, double stagnation)
      : NumericalError(what), t_lo(t_lo), t_hi(t_hi), err_estimate(err_estimate), stagnation(stagnation) {}
  double t_lo, t_hi, err_estimate, stagnation;
};

/// Two-phase bisection in the arc parameter: first until every panel's error
/// estimate is <= epsilon, then until every panel has u ||a||_2 <= epsilon.
/// Requires epsilon >= 10u, 0 <= max_depth <= 40 and N no larger than the
/// threshold order of the local frame.
PiecewiseModel adaptive_fit(const ComplexFunction& f, const Arc& arc, Index order, double epsilon,
                            int max_depth = 30, NodeFamily family = NodeFamily::chebyshev2);

/// 2^depth panels of equal parameter length, no acceptance test.
PiecewiseModel uniform_fit(const ComplexFunction& f, const Arc& arc, Index order, int depth,
                           NodeFamily family = NodeFamily::chebyshev2);

/// Index of the panel owning parameter t; breakpoints belong to the left panel.
std::size_t owning_panel(const PiecewiseModel& model, double t);

/// Intervals are queried by coordinate x in [a, b]; parametric arcs by the
/// parameter t in [-1, 1]. Throws std::out_of_range outside.
Complex eval_piecewise(const PiecewiseModel& model, double query);

struct GlobalErrorReport {
  double sup_error = 0.0;
  std::vector<double> per_panel;
};

/// Sup error over `grid` equispaced parameter points (grid >= 1000), globally
/// and per owning panel.
GlobalErrorReport global_error_report(const PiecewiseModel& model, const ComplexFunction& f, Index grid);

/// Text format. Header: `model interval <a> <b> <eps> <N> <count> <family>` or
/// `model parametric <label> <eps> <N> <count> <family>`; then one line per
/// panel: `t_lo t_hi N re(a_0) im(a_0) ... re(a_N) im(a_N)`. Numbers use
/// %.17g so finite values round-trip exactly.
void save_model(std::ostream& out, const PiecewiseModel& model, const std::string& arc_label = "arc");

/// Parametric models need the caller to resolve the stored label to an arc.
PiecewiseModel load_model(std::istream& in, const std::function<Arc(const std::string&)>& resolve_arc = {});

}  // namespace monointerp

#endif  // MONOINTERP_PIECEWISE_HPP
