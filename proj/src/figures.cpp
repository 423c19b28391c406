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

#include "monointerp/figures.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "monointerp/bounds.hpp"
#include "monointerp/panel.hpp"
#include "monointerp/registry.hpp"

namespace monointerp {

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

RegisteredFunction lookup(const std::string& name) {
  auto entry = find_function(name);
  if (!entry) throw std::invalid_argument("unknown function '" + name + "'");
  return *entry;
}

std::vector<Complex> grid_points(const Arc& arc, Index grid) {
  std::vector<Complex> z(grid);
  for (Index i = 0; i < grid; ++i) z[i] = arc.point(i + 1 == grid ? 1.0 : -1.0 + 2.0 * double(i) / double(grid - 1));
  return z;
}

}  // namespace

std::vector<ErrorCurveRow> run_error_curve(const ComplexFunction& f, const Arc& arc, NodeFamily family, Index n_max,
                                           Index grid) {
  if (n_max < 1 || n_max > 60) throw std::invalid_argument("run_error_curve: need 1 <= N_max <= 60");
  if (grid < 2) throw std::invalid_argument("run_error_curve: grid too small");
  const std::vector<Complex> zs = grid_points(arc, grid);
  std::vector<Complex> fz(grid);
  for (Index i = 0; i < grid; ++i) fz[i] = f(zs[i]);

  std::vector<ErrorCurveRow> rows;
  for (Index n = 1; n <= n_max; ++n) {
    const CollocationSet cs = collocation_points(n + 1, arc, family);
    CVector values(n + 1);
    for (Index j = 0; j <= n; ++j) {
      values[j] = f(cs.nodes()[j]);
      if (!is_finite(values[j])) throw NumericalError("run_error_curve: F is not finite at a node");
    }
    const SolveReport rep = solve_with_report(cs, values);
    const BarycentricInterpolant bary(values, cs);
    ErrorCurveRow row;
    row.N = n;
    for (Index i = 0; i < grid; ++i) {
      row.err_monomial = std::max(row.err_monomial, std::abs(fz[i] - eval_horner(rep.coeffs, zs[i])));
      row.err_barycentric = std::max(row.err_barycentric, std::abs(fz[i] - bary(zs[i])));
    }
    row.u_coeff_norm = kUnitRoundoff * coeff_norm2(rep.coeffs);
    row.gamma = rep.gamma_est;
    row.cond2 = rep.cond2;
    row.lambda = lebesgue_constant(cs, std::max(grid, 30 * cs.size()));
    row.max_node_value = values.cwiseAbs().maxCoeff();
    rows.push_back(row);
  }
  return rows;
}

std::vector<ErrorCurveRow> run_error_curve(const std::string& func, const Arc& arc, NodeFamily family, Index n_max,
                                           Index grid) {
  const RegisteredFunction entry = lookup(func);
  if (entry.interval_only && !arc.is_interval())
    throw std::invalid_argument("function '" + func + "' is registered on intervals only");
  return run_error_curve(entry.f, arc, family, n_max, grid);
}

std::vector<CondCurveRow> run_cond_curve(const Arc& arc, NodeFamily family, Index n_max, Index lebesgue_grid) {
  if (n_max < 1 || n_max > 60) throw std::invalid_argument("run_cond_curve: need 1 <= N_max <= 60");
  const double rho_star = rho_star_of(arc);
  std::vector<CondCurveRow> rows;
  for (Index n = 1; n <= n_max; ++n) {
    const CollocationSet cs = collocation_points(n + 1, arc, family);
    CondCurveRow row;
    row.N = n;
    row.vinv_measured = vandermonde_inv_norm2(cs.nodes()).value;
    row.lambda_measured = lebesgue_constant(cs, std::max(lebesgue_grid, 30 * cs.size()));
    row.vinv_bound = vinv_bound(n, row.lambda_measured, rho_star).value;
    row.lambda_bound = leb_bound(n);
    rows.push_back(row);
  }
  return rows;
}

std::vector<BoundFigureRow> run_bound_figure(const std::string& func, const Arc& arc, double c, double rho, Index n_max,
                                             Index grid) {
  if (!(c >= 0.0) || !(rho > 1.0)) throw std::invalid_argument("run_bound_figure: need C >= 0 and rho > 1");
  const RegisteredFunction entry = lookup(func);
  const double rho_star = rho_star_of(arc);
  const std::vector<ErrorCurveRow> base = run_error_curve(func, arc, NodeFamily::chebyshev2, n_max, grid);
  double norm_f = 0.0;
  for (const Complex& z : grid_points(arc, grid)) norm_f = std::max(norm_f, std::abs(entry.f(z)));
  std::vector<BoundFigureRow> rows;
  for (const ErrorCurveRow& b : base) {
    BoundFigureRow row;
    row.base = b;
    row.decay_envelope = c * std::exp(-double(b.N) * std::log(rho));
    row.u_C = kUnitRoundoff * c;
    row.u_coeff_bound = kUnitRoundoff * coeff_norm_bound(norm_f, c, rho, rho_star, b.lambda, b.N);
    rows.push_back(row);
  }
  return rows;
}

const std::vector<FigureSpec>& figure_catalog() {
  using K = FigureSpec::Kind;
  const NodeFamily cheb = NodeFamily::chebyshev2;
  const std::vector<std::string> unit{"unit"}, zero_one{"zero-one"};
  const std::vector<std::string> parabolas{"parabola:0.2", "parabola:0.4", "parabola:0.6"};
  static const std::vector<FigureSpec> catalog = {
      {"1a", K::error_curve, {"cos2x1"}, unit, cheb, 50, 0.0},
      {"1b", K::error_curve, {"cos2x1"}, unit, cheb, 50, 0.0},
      {"2a", K::error_curve, {"cos8x1"}, unit, cheb, 50, 0.0},
      {"2b", K::error_curve, {"cos12x1"}, unit, cheb, 50, 0.0},
      {"3a", K::error_curve, {"inv_sqrt2"}, unit, cheb, 50, 0.0},
      {"3b", K::error_curve, {"inv_half_i"}, unit, cheb, 50, 0.0},
      {"4a", K::error_curve, {"abspow"}, unit, cheb, 50, 0.0},
      {"4b", K::error_curve, {"abssin3"}, unit, cheb, 50, 0.0},
      {"6a", K::cond_curve, {}, unit, cheb, 50, 0.0},
      {"6b", K::cond_curve, {}, zero_one, cheb, 50, 0.0},
      {"7a", K::error_curve, {"cos8x1"}, unit, cheb, 50, 0.0},
      {"7b", K::error_curve, {"cos12x1"}, unit, cheb, 50, 0.0},
      {"7c", K::error_curve, {"inv_sqrt2"}, unit, cheb, 50, 0.0},
      {"7d", K::error_curve, {"inv_half_i"}, unit, cheb, 50, 0.0},
      {"7e", K::error_curve, {"abspow"}, unit, cheb, 50, 0.0},
      {"7f", K::error_curve, {"abssin3"}, unit, cheb, 50, 0.0},
      {"8a", K::bound, {"gauss"}, unit, cheb, 50, 4.0},
      {"8b", K::bound, {"tanx"}, unit, cheb, 50, 2.0},
      {"8c", K::bound, {"cos3x8"}, unit, cheb, 50, 5e7},
      {"8d", K::bound, {"abssin3"}, unit, cheb, 50, 1e13},
      {"8e", K::bound, {"cos12x1"}, unit, cheb, 50, 5e4},
      {"8f", K::bound, {"cheb_T30"}, unit, cheb, 50, 3e11},
      {"9a", K::bound, {"gauss"}, zero_one, cheb, 40, 5.0},
      {"9b", K::bound, {"tanx"}, zero_one, cheb, 40, 2e3},
      {"9c", K::bound, {"cos3x8"}, zero_one, cheb, 40, 5e10},
      {"9d", K::bound, {"sin6x1"}, zero_one, cheb, 40, 5e2},
      {"12a", K::bound, {"cos2x1"}, unit, cheb, 50, 3.0},
      {"12b", K::bound, {"inv_sqrt2"}, unit, cheb, 50, 3.0},
      {"12c", K::bound, {"inv_half_i"}, unit, cheb, 50, 5e7},
      {"12d", K::bound, {"abspow"}, unit, cheb, 50, 5e11},
      {"12e", K::bound, {"cos8x1"}, unit, cheb, 50, 1e3},
      {"12f", K::bound, {"cheb_T20"}, unit, cheb, 50, 5e7},
      {"13", K::cond_curve, {}, parabolas, cheb, 50, 0.0},
      {"14a", K::error_curve, {"cos2x1"}, parabolas, cheb, 50, 0.0},
      {"14b", K::error_curve, {"cos8x1"}, parabolas, cheb, 50, 0.0},
      {"14c", K::error_curve, {"expz2"}, parabolas, cheb, 50, 0.0},
      {"14d", K::error_curve, {"inv_zm2"}, parabolas, cheb, 50, 0.0},
      {"14e", K::error_curve, {"inv_zpi"}, parabolas, cheb, 50, 0.0},
      {"14f", K::error_curve, {"tantan"}, parabolas, cheb, 50, 0.0},
  };
  return catalog;
}

const FigureSpec* find_figure(const std::string& id) {
  for (const FigureSpec& spec : figure_catalog())
    if (spec.id == id) return &spec;
  return nullptr;
}

std::string figure_csv(const FigureSpec& spec) {
  using K = FigureSpec::Kind;
  std::ostringstream out;
  const bool multi = spec.arcs.size() > 1;
  const char* lead = multi ? "arc," : "";
  switch (spec.kind) {
    case K::error_curve: out << lead << "N,err_monomial,err_barycentric,u_coeff_norm,gamma,cond2\n"; break;
    case K::cond_curve: out << lead << "N,vinv_measured,vinv_bound,lambda_measured,lambda_bound\n"; break;
    case K::bound:
      out << lead << "N,err_monomial,err_barycentric,u_coeff_norm,gamma,cond2,decay_envelope,u_C,u_coeff_bound\n";
      break;
  }
  for (const std::string& arc_name : spec.arcs) {
    const Arc arc = arc_from_name(arc_name);
    const std::string prefix = multi ? arc_name + "," : "";
    auto err_cols = [](const ErrorCurveRow& r) {
      return std::to_string(r.N) + ',' + format_number(r.err_monomial) + ',' + format_number(r.err_barycentric) +
             ',' + format_number(r.u_coeff_norm) + ',' + format_number(r.gamma) + ',' + format_number(r.cond2);
    };
    switch (spec.kind) {
      case K::error_curve:
        for (const auto& r : run_error_curve(spec.functions.at(0), arc, spec.family, spec.n_max))
          out << prefix << err_cols(r) << '\n';
        break;
      case K::cond_curve:
        for (const auto& r : run_cond_curve(arc, spec.family, spec.n_max))
          out << prefix << r.N << ',' << format_number(r.vinv_measured) << ',' << format_number(r.vinv_bound) << ','
              << format_number(r.lambda_measured) << ',' << format_number(r.lambda_bound) << '\n';
        break;
      case K::bound: {
        const double rho = rho_star_of(arc);
        for (const auto& r : run_bound_figure(spec.functions.at(0), arc, spec.C, rho, spec.n_max))
          out << prefix << err_cols(r.base) << ',' << format_number(r.decay_envelope) << ',' << format_number(r.u_C)
              << ',' << format_number(r.u_coeff_bound) << '\n';
        break;
      }
    }
  }
  return out.str();
}

std::string write_figure(const std::string& id, const std::string& dir) {
  const FigureSpec* spec = find_figure(id);
  if (!spec) throw std::invalid_argument("unknown figure id '" + id + "'");
  std::filesystem::create_directories(dir);
  const std::string path = (std::filesystem::path(dir) / ("fig" + id + ".csv")).string();
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << figure_csv(*spec);
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
  return path;
}

}  // namespace monointerp
