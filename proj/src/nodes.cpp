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

#include "monointerp/nodes.hpp"

#include <algorithm>
#include <limits>

namespace monointerp {

const char* to_string(NodeFamily family) {
  switch (family) {
    case NodeFamily::chebyshev2: return "chebyshev2";
    case NodeFamily::chebyshev1: return "chebyshev1";
    case NodeFamily::legendre: return "legendre";
    case NodeFamily::custom: return "custom";
  }
  return "unknown";
}

NodeFamily node_family_from_string(const std::string& name) {
  if (name == "chebyshev2" || name == "chebyshev") return NodeFamily::chebyshev2;
  if (name == "chebyshev1") return NodeFamily::chebyshev1;
  if (name == "legendre") return NodeFamily::legendre;
  if (name == "custom") return NodeFamily::custom;
  throw std::invalid_argument("unknown node family '" + name + "'");
}

// ---------------------------------------------------------------------------
// Arc

Arc::Arc(std::variant<Interval, ParametricCurve> kind, std::optional<double> rho_star)
    : kind_(std::move(kind)), rho_star_(rho_star) {
  if (rho_star_ && !(*rho_star_ > 1.0)) throw std::invalid_argument("Arc: rho_star must exceed 1");
}

Arc Arc::interval(double a, double b, std::optional<double> rho_star) {
  if (!(is_finite(a) && is_finite(b) && a < b)) throw std::invalid_argument("Arc: interval requires finite a < b");
  return Arc(Interval{a, b}, rho_star);
}

Arc Arc::parametric(std::function<Complex(double)> g, std::optional<double> rho_star, int samples_hint) {
  if (!g) throw std::invalid_argument("Arc: empty parameterization");
  return Arc(ParametricCurve{std::move(g), samples_hint}, rho_star);
}

const Interval& Arc::as_interval() const {
  if (!is_interval()) throw std::invalid_argument("Arc: expected an interval");
  return std::get<Interval>(kind_);
}

const ParametricCurve& Arc::as_parametric() const {
  if (is_interval()) throw std::invalid_argument("Arc: expected a parametric arc");
  return std::get<ParametricCurve>(kind_);
}

Complex Arc::point(double t) const {
  if (const auto* iv = std::get_if<Interval>(&kind_)) {
    if (t == -1.0) return iv->a;
    if (t == 1.0) return iv->b;
    return 0.5 * (iv->a + iv->b) + 0.5 * (iv->b - iv->a) * t;
  }
  return std::get<ParametricCurve>(kind_).g(t);
}

Arc Arc::with_rho_star(double rho_star) const { return Arc(kind_, rho_star); }

// ---------------------------------------------------------------------------
// CollocationSet

CollocationSet::CollocationSet(CVector nodes, RVector params, NodeFamily family, Arc arc)
    : nodes_(std::move(nodes)), params_(std::move(params)), family_(family), arc_(std::move(arc)) {
  if (nodes_.size() < 1) throw std::invalid_argument("CollocationSet: empty");
  if (nodes_.size() != params_.size()) throw std::invalid_argument("CollocationSet: |params| != |nodes|");
  if (!all_finite(nodes_) || !all_finite(params_)) throw std::invalid_argument("CollocationSet: non-finite entry");
  for (Index j = 1; j < params_.size(); ++j)
    if (!(params_[j] > params_[j - 1])) throw std::invalid_argument("CollocationSet: params not strictly increasing");
  for (Index j = 0; j < nodes_.size(); ++j)
    for (Index k = j + 1; k < nodes_.size(); ++k)
      if (nodes_[j] == nodes_[k]) throw std::invalid_argument("CollocationSet: coincident nodes");
}

namespace {

CollocationSet from_reference_params(const RVector& t, NodeFamily family, const Arc& arc) {
  arc.as_interval();
  CVector z(t.size());
  for (Index j = 0; j < t.size(); ++j) z[j] = arc.point(t[j]);
  return CollocationSet(std::move(z), t, family, arc);
}

}  // namespace

CollocationSet chebyshev_points(Index n_plus_1, const Arc& interval_arc) {
  if (n_plus_1 < 1) throw std::invalid_argument("chebyshev_points: need at least one point");
  RVector t(n_plus_1);
  if (n_plus_1 == 1) {
    t[0] = 0.0;
  } else {
    const double n = static_cast<double>(n_plus_1 - 1);
    for (Index j = 0; j < n_plus_1; ++j) t[j] = std::sin(kPi * (2.0 * j - n) / (2.0 * n));
  }
  return from_reference_params(t, NodeFamily::chebyshev2, interval_arc);
}

CollocationSet chebyshev1_points(Index n_plus_1, const Arc& interval_arc) {
  if (n_plus_1 < 1) throw std::invalid_argument("chebyshev1_points: need at least one point");
  RVector t(n_plus_1);
  const double n = static_cast<double>(n_plus_1 - 1);
  for (Index j = 0; j < n_plus_1; ++j) t[j] = std::sin(kPi * (2.0 * j - n) / (2.0 * (n + 1.0)));
  return from_reference_params(t, NodeFamily::chebyshev1, interval_arc);
}

std::pair<RVector, RVector> gauss_legendre(Index n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one point");
  RVector x(n), w(n);
  const Index half = n / 2;
  for (Index k = 0; k < (n + 1) / 2; ++k) {
    // k-th largest root
    double root = std::cos(kPi * (static_cast<double>(k) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = root;
      for (Index m = 1; m < n; ++m) {
        const double p2 = ((2.0 * m + 1.0) * root * p1 - m * p0) / (m + 1.0);
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = static_cast<double>(n) * (root * p1 - p0) / (root * root - 1.0);
      const double step = p1 / dp;
      root -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(root))) {
        converged = true;
        break;
      }
    }
    if (!converged) throw NumericalError("gauss_legendre: Newton iteration did not converge");
    // derivative at the final root for the weight
    double p0 = 1.0, p1 = root;
    for (Index m = 1; m < n; ++m) {
      const double p2 = ((2.0 * m + 1.0) * root * p1 - m * p0) / (m + 1.0);
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0;
    dp = static_cast<double>(n) * (root * p1 - p0) / (root * root - 1.0);
    const double weight = 2.0 / ((1.0 - root * root) * dp * dp);
    x[n - 1 - k] = root;
    x[k] = -root;
    w[n - 1 - k] = weight;
    w[k] = weight;
  }
  if (n % 2 == 1) x[half] = 0.0;
  return {x, w};
}

CollocationSet legendre_points(Index n_plus_1, const Arc& interval_arc) {
  auto [t, w] = gauss_legendre(n_plus_1);
  (void)w;
  return from_reference_params(t, NodeFamily::legendre, interval_arc);
}

CollocationSet map_to_arc(const CollocationSet& reference, const Arc& parametric_arc) {
  if (reference.family() == NodeFamily::custom)
    throw std::invalid_argument("map_to_arc: reference set must be a standard node family");
  const RVector& t = reference.params();
  CVector z(t.size());
  double scale = 0.0;
  for (Index j = 0; j < t.size(); ++j) {
    z[j] = parametric_arc.point(t[j]);
    if (!is_finite(z[j])) throw NumericalError("map_to_arc: non-finite image at t = " + std::to_string(t[j]));
    scale = std::max(scale, std::abs(z[j]));
  }
  const double tol = 8.0 * kUnitRoundoff * std::max(1.0, scale);
  for (Index j = 0; j < z.size(); ++j)
    for (Index k = j + 1; k < z.size(); ++k)
      if (std::abs(z[j] - z[k]) <= tol)
        throw NumericalError("map_to_arc: parameterization maps t = " + std::to_string(t[j]) + " and t = " +
                             std::to_string(t[k]) + " to coincident points");
  return CollocationSet(std::move(z), t, reference.family(), parametric_arc);
}

CollocationSet collocation_points(Index n_plus_1, const Arc& arc, NodeFamily family) {
  const Arc reference_interval = arc.is_interval() ? arc : Arc::interval(-1.0, 1.0);
  CollocationSet reference = [&] {
    switch (family) {
      case NodeFamily::chebyshev2: return chebyshev_points(n_plus_1, reference_interval);
      case NodeFamily::chebyshev1: return chebyshev1_points(n_plus_1, reference_interval);
      case NodeFamily::legendre: return legendre_points(n_plus_1, reference_interval);
      case NodeFamily::custom: break;
    }
    throw std::invalid_argument("collocation_points: custom nodes must be supplied explicitly");
  }();
  if (arc.is_interval()) return reference;
  return map_to_arc(reference, arc);
}

CVector barycentric_weights(const CVector& nodes) {
  const Index n = nodes.size();
  RVector log_magnitude = RVector::Zero(n);
  CVector phase = CVector::Ones(n);
  for (Index j = 0; j < n; ++j) {
    for (Index k = 0; k < n; ++k) {
      if (k == j) continue;
      const Complex d = nodes[j] - nodes[k];
      const double r = std::abs(d);
      log_magnitude[j] -= std::log(r);
      phase[j] *= std::conj(d) / r;
    }
    phase[j] /= std::abs(phase[j]);
  }
  const double top = log_magnitude.maxCoeff();
  CVector w(n);
  for (Index j = 0; j < n; ++j) w[j] = std::exp(log_magnitude[j] - top) * phase[j];
  return w;
}

double lebesgue_constant(const CollocationSet& cs, Index grid) {
  if (grid < 30 * cs.size()) throw std::invalid_argument("lebesgue_constant: grid must be at least 30 |nodes|");
  if (cs.size() == 1) return 1.0;
  const CVector w = barycentric_weights(cs.nodes());
  const CVector& z = cs.nodes();
  double best = 1.0;
  for (Index i = 0; i < grid; ++i) {
    const double t = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(grid - 1);
    const Complex x = cs.arc().point(t);
    double num = 0.0;
    Complex den = 0.0;
    bool at_node = false;
    for (Index j = 0; j < z.size(); ++j) {
      const Complex d = x - z[j];
      if (d == Complex(0.0)) {
        at_node = true;
        break;
      }
      const Complex term = w[j] / d;
      num += std::abs(term);
      den += term;
    }
    if (!at_node) best = std::max(best, num / std::abs(den));
  }
  return best;
}

}  // namespace monointerp
