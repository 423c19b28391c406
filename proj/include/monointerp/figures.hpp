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

#ifndef MONOINTERP_FIGURES_HPP
#define MONOINTERP_FIGURES_HPP

#include <string>
#include <vector>

#include "monointerp/nodes.hpp"

namespace monointerp {

/// One order of a global-coordinate interpolation experiment. Errors are sup
/// norms over an equispaced parameter grid.
struct ErrorCurveRow {
  Index N = 0;
  double err_monomial = 0.0;
  double err_barycentric = 0.0;
  double u_coeff_norm = 0.0;
  double gamma = 0.0;
  double cond2 = 0.0;
  double lambda = 0.0;  // measured Lebesgue constant on the same grid
  double max_node_value = 0.0;
};

/// Orders 1..n_max; coefficients are solved in global coordinates so the
/// monomial basis sees the arc where it actually sits.
std::vector<ErrorCurveRow> run_error_curve(const ComplexFunction& f, const Arc& arc, NodeFamily family, Index n_max,
                                           Index grid = 10000);
std::vector<ErrorCurveRow> run_error_curve(const std::string& func, const Arc& arc, NodeFamily family, Index n_max,
                                           Index grid = 10000);

struct CondCurveRow {
  Index N = 0;
  double vinv_measured = 0.0;
  double vinv_bound = 0.0;
  double lambda_measured = 0.0;
  double lambda_bound = 0.0;
};

/// ||V^-1||_2 against rho_*^N Lambda_N for orders 1..n_max.
std::vector<CondCurveRow> run_cond_curve(const Arc& arc, NodeFamily family, Index n_max, Index lebesgue_grid = 10000);

struct BoundFigureRow {
  ErrorCurveRow base;
  double decay_envelope = 0.0;  // C rho^-N
  double u_C = 0.0;             // u C, the predicted stagnation level
  double u_coeff_bound = 0.0;   // u times the coefficient-norm bound
};

std::vector<BoundFigureRow> run_bound_figure(const std::string& func, const Arc& arc, double c, double rho, Index n_max,
                                             Index grid = 10000);

struct FigureSpec {
  std::string id;
  enum class Kind { error_curve, cond_curve, bound } kind;
  std::vector<std::string> functions;
  std::vector<std::string> arcs;  // several arcs add a leading arc column
  NodeFamily family = NodeFamily::chebyshev2;
  Index n_max = 50;
  double C = 0.0;  // bound figures only
};

const std::vector<FigureSpec>& figure_catalog();
const FigureSpec* find_figure(const std::string& id);

/// CSV text of a figure: a header row and one `%.17g` row per order.
std::string figure_csv(const FigureSpec& spec);

/// Writes fig<id>.csv into dir and returns the path.
std::string write_figure(const std::string& id, const std::string& dir);

std::string format_number(double x);

}  // namespace monointerp

#endif  // MONOINTERP_FIGURES_HPP
