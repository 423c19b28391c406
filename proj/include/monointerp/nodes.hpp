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

#ifndef MONOINTERP_NODES_HPP
#define MONOINTERP_NODES_HPP

#include <optional>
#include <utility>
#include <variant>

#include "monointerp/types.hpp"

namespace monointerp {

enum class NodeFamily { chebyshev2, chebyshev1, legendre, custom };

const char* to_string(NodeFamily family);
NodeFamily node_family_from_string(const std::string& name);

struct Interval {
  double a;
  double b;
};

/// A smooth arc g : [-1, 1] -> C. The map must be deterministic and safe to
/// call concurrently.
struct ParametricCurve {
  std::function<Complex(double)> g;
  int samples_hint = 256;
};

/// An interval [a, b] or a parameterized arc, both parameterized over
/// t in [-1, 1]. Optionally carries an estimate of rho_*, the parameter of the
/// smallest generalized Bernstein region containing the unit disk.
class Arc {
 public:
  static Arc interval(double a, double b, std::optional<double> rho_star = std::nullopt);
  static Arc parametric(std::function<Complex(double)> g, std::optional<double> rho_star = std::nullopt,
                        int samples_hint = 256);

  bool is_interval() const { return std::holds_alternative<Interval>(kind_); }
  const Interval& as_interval() const;
  const ParametricCurve& as_parametric() const;

  /// Point on the arc at parameter t. Intervals are parameterized affinely.
  Complex point(double t) const;

  const std::optional<double>& rho_star() const { return rho_star_; }
  Arc with_rho_star(double rho_star) const;

 private:
  Arc(std::variant<Interval, ParametricCurve> kind, std::optional<double> rho_star);

  std::variant<Interval, ParametricCurve> kind_;
  std::optional<double> rho_star_;
};

/// Distinct collocation nodes z_j = arc.point(t_j) with strictly increasing
/// parameters t_j.
class CollocationSet {
 public:
  CollocationSet(CVector nodes, RVector params, NodeFamily family, Arc arc);

  const CVector& nodes() const { return nodes_; }
  const RVector& params() const { return params_; }
  NodeFamily family() const { return family_; }
  const Arc& arc() const { return arc_; }
  Index size() const { return nodes_.size(); }
  Index degree() const { return nodes_.size() - 1; }

 private:
  CVector nodes_;
  RVector params_;
  NodeFamily family_;
  Arc arc_;
};

/// Second-kind (extrema) Chebyshev points t_j = -cos(j pi / N) in ascending
/// order, mapped affinely onto the interval. A single point is the midpoint.
CollocationSet chebyshev_points(Index n_plus_1, const Arc& interval_arc);

/// First-kind (root) Chebyshev points, ascending.
CollocationSet chebyshev1_points(Index n_plus_1, const Arc& interval_arc);

/// Roots of the Legendre polynomial of degree n_plus_1, ascending.
CollocationSet legendre_points(Index n_plus_1, const Arc& interval_arc);

/// Nodes and weights of the (n)-point Gauss-Legendre rule on [-1, 1].
std::pair<RVector, RVector> gauss_legendre(Index n);

/// Images g(t_j) of a reference set on [-1, 1] under a parametric arc.
CollocationSet map_to_arc(const CollocationSet& reference, const Arc& parametric_arc);

/// Nodes of the given family on any arc (intervals directly, parametric arcs via map_to_arc).
CollocationSet collocation_points(Index n_plus_1, const Arc& arc, NodeFamily family);

/// Barycentric weights w_j = 1 / prod_{k != j} (z_j - z_k), rescaled by a
/// common positive factor so the largest has modulus 1.
CVector barycentric_weights(const CVector& nodes);

/// Lower estimate of the Lebesgue constant: max over `grid` points uniform in
/// the arc parameter of sum_j |l_j(z)|. Requires grid >= 30 |nodes|.
double lebesgue_constant(const CollocationSet& cs, Index grid);

}  // namespace monointerp

#endif  // MONOINTERP_NODES_HPP
