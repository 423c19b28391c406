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

#include "monointerp/piecewise.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "monointerp/bounds.hpp"

namespace monointerp {

namespace {

Index local_threshold(const Arc& arc, NodeFamily family) {
  if (arc.is_interval()) {
    static const Index unit = threshold_order(Arc::interval(-1.0, 1.0), NodeFamily::chebyshev2);
    if (family == NodeFamily::chebyshev2) return unit;
    return threshold_order(Arc::interval(-1.0, 1.0), family);
  }
  const ArcPiece whole(arc);
  const AffineFrame frame = chord_frame(whole);
  return threshold_order(Arc::parametric([whole, frame](double s) { return frame.to_local(whole.point(s)); }), family);
}

void check_order(Index order) {
  if (order < 1 || order > 60) throw std::invalid_argument("piecewise: need 1 <= N <= 60");
}

struct Fitter {
  const ComplexFunction& f;
  const Arc& arc;
  Index order;
  double epsilon;
  int max_depth;
  NodeFamily family;
  PiecewiseStats stats;

  PanelInterpolant fit(double lo, double hi) {
    ++stats.total_solves;
    return fit_panel(f, ArcPiece(arc, lo, hi), order + 1, family);
  }

  [[noreturn]] void give_up(const PanelInterpolant& p, const char* criterion) const {
    std::ostringstream msg;
    msg.precision(17);
    msg << "adaptive_fit: depth limit " << max_depth << " reached on [" << p.piece.t_lo << ", " << p.piece.t_hi
        << "] with " << criterion << " (err_estimate " << p.err_estimate << ", u||a|| " << p.stagnation
        << ", eps " << epsilon << ")";
    throw MaxDepthError(msg.str(), p.piece.t_lo, p.piece.t_hi, p.err_estimate, p.stagnation);
  }

  // Phase 1: bisect until the error estimate meets epsilon.
  void resolve_error(PanelInterpolant p, int depth, std::vector<std::pair<PanelInterpolant, int>>& out) {
    if (p.err_estimate <= epsilon) {
      out.emplace_back(std::move(p), depth);
      return;
    }
    if (depth >= max_depth) give_up(p, "error estimate above eps");
    const double lo = p.piece.t_lo, hi = p.piece.t_hi, mid = 0.5 * (lo + hi);
    resolve_error(fit(lo, mid), depth + 1, out);
    resolve_error(fit(mid, hi), depth + 1, out);
  }

  // Phase 2: bisect until u ||a||_2 meets epsilon; children are re-checked
  // against both criteria.
  void resolve_norm(PanelInterpolant p, int depth, std::vector<PanelInterpolant>& out) {
    if (p.stagnation <= epsilon && p.err_estimate <= epsilon) {
      stats.max_depth = std::max<Index>(stats.max_depth, depth);
      out.push_back(std::move(p));
      return;
    }
    if (depth >= max_depth) give_up(p, "u||a|| or error estimate above eps");
    ++stats.coefficient_splits;
    const double lo = p.piece.t_lo, hi = p.piece.t_hi, mid = 0.5 * (lo + hi);
    resolve_norm(fit(lo, mid), depth + 1, out);
    resolve_norm(fit(mid, hi), depth + 1, out);
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(std::istream& in, const char* what) {
  std::string tok;
  if (!(in >> tok)) throw std::invalid_argument(std::string("load_model: missing ") + what);
  std::size_t used = 0;
  double v = std::stod(tok, &used);
  if (used != tok.size()) throw std::invalid_argument(std::string("load_model: malformed ") + what + " '" + tok + "'");
  return v;
}

}  // namespace

PiecewiseModel adaptive_fit(const ComplexFunction& f, const Arc& arc, Index order, double epsilon, int max_depth,
                            NodeFamily family) {
  check_order(order);
  if (!(epsilon >= 10.0 * kUnitRoundoff)) throw std::invalid_argument("adaptive_fit: epsilon must be >= 10u");
  if (max_depth < 0 || max_depth > 40) throw std::invalid_argument("adaptive_fit: need 0 <= max_depth <= 40");
  const Index limit = local_threshold(arc, family);
  if (order > limit)
    throw std::invalid_argument("adaptive_fit: N = " + std::to_string(order) + " exceeds the threshold order " +
                                std::to_string(limit));

  Fitter fitter{f, arc, order, epsilon, max_depth, family, {}};
  std::vector<std::pair<PanelInterpolant, int>> phase1;
  fitter.resolve_error(fitter.fit(-1.0, 1.0), 0, phase1);

  PiecewiseModel model{arc, epsilon, order, family, {}, {}};
  for (auto& [panel, depth] : phase1) fitter.resolve_norm(std::move(panel), depth, model.panels);
  model.stats = fitter.stats;
  model.stats.panel_count = Index(model.panels.size());
  return model;
}

PiecewiseModel uniform_fit(const ComplexFunction& f, const Arc& arc, Index order, int depth, NodeFamily family) {
  check_order(order);
  if (depth < 0 || depth > 40) throw std::invalid_argument("uniform_fit: need 0 <= depth <= 40");
  PiecewiseModel model{arc, 0.0, order, family, {}, {}};
  const double count = std::ldexp(1.0, depth);
  for (double i = 0; i < count; ++i) {
    const double lo = (i == 0) ? -1.0 : -1.0 + 2.0 * i / count;
    const double hi = (i + 1 == count) ? 1.0 : -1.0 + 2.0 * (i + 1) / count;
    model.panels.push_back(fit_panel(f, ArcPiece(arc, lo, hi), order + 1, family));
    model.epsilon = std::max({model.epsilon, model.panels.back().err_estimate, model.panels.back().stagnation});
  }
  model.stats = {Index(model.panels.size()), depth, Index(model.panels.size()), 0};
  return model;
}

std::size_t owning_panel(const PiecewiseModel& model, double t) {
  if (model.panels.empty()) throw std::invalid_argument("owning_panel: empty model");
  if (!(t >= model.panels.front().piece.t_lo && t <= model.panels.back().piece.t_hi))
    throw std::out_of_range("owning_panel: parameter outside the model's range");
  auto it = std::lower_bound(model.panels.begin(), model.panels.end(), t,
                             [](const PanelInterpolant& p, double q) { return p.piece.t_hi < q; });
  return std::size_t(it - model.panels.begin());
}

Complex eval_piecewise(const PiecewiseModel& model, double query) {
  if (model.arc.is_interval()) {
    const Interval& iv = model.arc.as_interval();
    if (!(query >= iv.a && query <= iv.b)) throw std::out_of_range("eval_piecewise: x outside [a, b]");
    double t = (query == iv.a) ? -1.0 : (query == iv.b) ? 1.0 : (2.0 * query - (iv.a + iv.b)) / (iv.b - iv.a);
    t = std::clamp(t, -1.0, 1.0);
    return eval_panel(model.panels[owning_panel(model, t)], Complex(query));
  }
  if (!(query >= -1.0 && query <= 1.0)) throw std::out_of_range("eval_piecewise: t outside [-1, 1]");
  return eval_panel_at_param(model.panels[owning_panel(model, query)], query);
}

GlobalErrorReport global_error_report(const PiecewiseModel& model, const ComplexFunction& f, Index grid) {
  if (grid < 1000) throw std::invalid_argument("global_error_report: grid must be >= 1000");
  GlobalErrorReport rep;
  rep.per_panel.assign(model.panels.size(), 0.0);
  for (Index i = 0; i < grid; ++i) {
    const double t = (i == grid - 1) ? 1.0 : -1.0 + 2.0 * double(i) / double(grid - 1);
    const std::size_t k = owning_panel(model, t);
    const Complex z = model.arc.point(t);
    const double err = std::abs(f(z) - eval_panel(model.panels[k], z));
    rep.per_panel[k] = std::max(rep.per_panel[k], err);
    rep.sup_error = std::max(rep.sup_error, err);
  }
  return rep;
}

void save_model(std::ostream& out, const PiecewiseModel& model, const std::string& arc_label) {
  out << "model ";
  if (model.arc.is_interval()) {
    out << "interval " << fmt(model.arc.as_interval().a) << ' ' << fmt(model.arc.as_interval().b);
  } else {
    if (arc_label.empty() || arc_label.find_first_of(" \t\n") != std::string::npos)
      throw std::invalid_argument("save_model: arc label must be a single non-empty token");
    out << "parametric " << arc_label;
  }
  out << ' ' << fmt(model.epsilon) << ' ' << model.order << ' ' << model.panels.size() << ' '
      << to_string(model.family) << '\n';
  for (const PanelInterpolant& p : model.panels) {
    out << fmt(p.piece.t_lo) << ' ' << fmt(p.piece.t_hi) << ' ' << p.poly.degree();
    for (Index k = 0; k < p.poly.size(); ++k) out << ' ' << fmt(p.poly[k].real()) << ' ' << fmt(p.poly[k].imag());
    out << '\n';
  }
}

PiecewiseModel load_model(std::istream& in, const std::function<Arc(const std::string&)>& resolve_arc) {
  std::string tag, kind;
  if (!(in >> tag >> kind) || tag != "model") throw std::invalid_argument("load_model: missing 'model' header");
  std::optional<Arc> arc;
  if (kind == "interval") {
    const double a = parse_double(in, "interval start");
    const double b = parse_double(in, "interval end");
    arc = Arc::interval(a, b);
  } else if (kind == "parametric") {
    std::string label;
    if (!(in >> label)) throw std::invalid_argument("load_model: missing arc label");
    if (!resolve_arc) throw std::invalid_argument("load_model: parametric model needs an arc resolver");
    arc = resolve_arc(label);
  } else {
    throw std::invalid_argument("load_model: unknown arc kind '" + kind + "'");
  }
  PiecewiseModel model{*arc, 0.0, 0, NodeFamily::chebyshev2, {}, {}};
  model.epsilon = parse_double(in, "epsilon");
  std::size_t count = 0;
  std::string family;
  if (!(in >> model.order >> count >> family)) throw std::invalid_argument("load_model: malformed header");
  model.family = node_family_from_string(family);
  for (std::size_t i = 0; i < count; ++i) {
    const double lo = parse_double(in, "t_lo");
    const double hi = parse_double(in, "t_hi");
    Index degree = 0;
    if (!(in >> degree) || degree < 1 || degree > 60) throw std::invalid_argument("load_model: bad panel degree");
    CVector a(degree + 1);
    for (Index k = 0; k <= degree; ++k) {
      const double re = parse_double(in, "coefficient");
      const double im = parse_double(in, "coefficient");
      a[k] = Complex(re, im);
    }
    if (!model.panels.empty() && model.panels.back().piece.t_hi != lo)
      throw std::invalid_argument("load_model: panels are not contiguous");
    model.panels.push_back(assemble_panel(ArcPiece(*arc, lo, hi), MonomialPoly(std::move(a)), model.family));
  }
  if (model.panels.empty() || model.panels.front().piece.t_lo != -1.0 || model.panels.back().piece.t_hi != 1.0)
    throw std::invalid_argument("load_model: panels do not cover [-1, 1]");
  model.stats.panel_count = Index(model.panels.size());
  return model;
}

}  // namespace monointerp
