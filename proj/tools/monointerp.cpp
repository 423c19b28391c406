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

// Command-line front end: single-panel fits, adaptive piecewise models,
// rootfinding, moment tables, bound curves, figure CSVs and threshold orders.
// Exit status: 0 success, 1 usage error, 2 numerical failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "monointerp/bounds.hpp"
#include "monointerp/figures.hpp"
#include "monointerp/kernels.hpp"
#include "monointerp/piecewise.hpp"
#include "monointerp/registry.hpp"

using namespace monointerp;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string g17(double x) { return format_number(x); }

RegisteredFunction resolve_function(const std::string& name, const Arc& arc) {
  auto entry = find_function(name);
  if (!entry) throw UsageError("unknown function '" + name + "'\n" + registry_listing());
  if (entry->interval_only && !arc.is_interval())
    throw UsageError("function '" + name + "' is registered on intervals only");
  return *entry;
}

Arc resolve_arc(const std::string& name) {
  try {
    return arc_from_name(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()) + "\n" + registry_listing());
  }
}

Complex parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("malformed complex number '" + s + "' (expected re or re,im)");
  }
}

std::string out_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("MONOINTERP_OUT_DIR"); env && *env) return env;
  return ".";
}

// Tabulated samples: one "re(z) im(z) re(F) im(F)" line per node.
std::pair<CVector, CVector> read_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read samples file '" + path + "'");
  std::vector<Complex> z, f;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    std::istringstream ls(line);
    double zr, zi, fr, fi;
    if (!(ls >> zr >> zi >> fr >> fi))
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected four numbers");
    z.emplace_back(zr, zi);
    f.emplace_back(fr, fi);
  }
  if (z.size() < 2) throw UsageError("samples file needs at least two nodes");
  CVector zv(z.size()), fv(f.size());
  for (std::size_t i = 0; i < z.size(); ++i) zv[Index(i)] = z[i], fv[Index(i)] = f[i];
  return {zv, fv};
}

void print_coefficients(std::ostream& out, const MonomialPoly& p) {
  out << "k,re,im\n";
  for (Index k = 0; k < p.size(); ++k) out << k << ',' << g17(p[k].real()) << ',' << g17(p[k].imag()) << '\n';
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw UsageError("cannot write '" + path + "'");
  std::cerr << "wrote " << path << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial-basis interpolation on intervals and arcs"};
  app.require_subcommand(1);

  std::string func, expr_file, arc_name = "unit", family_name = "chebyshev2", out, save_model, kind = "fourier",
                                xi_text = "0,0", id;
  Index order = 20, n_max = 50;
  int max_depth = 30;
  double eps = 1e-12, band = 1e-8, c = 0.0, za = -1.0, zb = 1.0;

  auto* interp = app.add_subcommand("interp", "fit one panel over the whole arc");
  auto* fsrc = interp->add_option("--func", func, "registered function name");
  interp->add_option("--expr-file", expr_file, "samples file: re(z) im(z) re(F) im(F) per line")->excludes(fsrc);
  interp->add_option("--arc", arc_name, "arc descriptor")->capture_default_str();
  interp->add_option("--N", order, "polynomial order")->capture_default_str();
  interp->add_option("--family", family_name, "chebyshev2 | chebyshev1 | legendre")->capture_default_str();
  interp->add_option("--out", out, "write coefficients CSV here");

  auto* piecewise = app.add_subcommand("piecewise", "adaptive piecewise fit");
  piecewise->add_option("--func", func)->required();
  piecewise->add_option("--arc", arc_name)->capture_default_str();
  piecewise->add_option("--N", order)->capture_default_str();
  piecewise->add_option("--eps", eps)->capture_default_str();
  piecewise->add_option("--max-depth", max_depth)->capture_default_str();
  piecewise->add_option("--family", family_name)->capture_default_str();
  piecewise->add_option("--save-model", save_model, "write the model in text form");

  auto* rootcmd = app.add_subcommand("roots", "roots of F on the arc");
  rootcmd->add_option("--func", func)->required();
  rootcmd->add_option("--arc", arc_name)->capture_default_str();
  rootcmd->add_option("--N", order)->capture_default_str();
  rootcmd->add_option("--eps", eps)->capture_default_str();
  rootcmd->add_option("--band", band, "acceptance band around the panel")->capture_default_str();
  rootcmd->add_option("--max-depth", max_depth)->capture_default_str();

  auto* moments = app.add_subcommand("moments", "moment table on a chord");
  moments->add_option("--kind", kind, "fourier | cauchy | log")->capture_default_str();
  moments->add_option("--c", c, "frequency (fourier)")->capture_default_str();
  moments->add_option("--xi", xi_text, "singularity re,im (cauchy, log)")->capture_default_str();
  moments->add_option("--N", order)->capture_default_str();
  moments->add_option("--za", za, "chord start (real part)")->capture_default_str();
  moments->add_option("--zb", zb, "chord end (real part)")->capture_default_str();

  auto* boundcmd = app.add_subcommand("bounds", "||V^-1|| and Lebesgue constants against their bounds");
  boundcmd->add_option("--arc", arc_name)->capture_default_str();
  boundcmd->add_option("--Nmax", n_max)->capture_default_str();
  boundcmd->add_option("--family", family_name)->capture_default_str();
  boundcmd->add_option("--out", out, "write CSV here");

  auto* figure = app.add_subcommand("figure", "write a figure CSV");
  figure->add_option("--id", id, "figure id")->required();
  figure->add_option("--out", out, "output directory (default $MONOINTERP_OUT_DIR or .)");

  auto* threshold = app.add_subcommand("threshold", "largest order with ||V^-1||_2 <= 1/u");
  threshold->add_option("--arc", arc_name)->capture_default_str();
  threshold->add_option("--family", family_name)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const NodeFamily family = node_family_from_string(family_name);
    if (*interp) {
      const Arc arc = resolve_arc(arc_name);
      if (!expr_file.empty()) {
        auto [z, f] = read_samples(expr_file);
        RVector params(z.size());
        for (Index j = 0; j < z.size(); ++j) params[j] = -1.0 + 2.0 * double(j) / double(z.size() - 1);
        const CollocationSet cs(z, params, NodeFamily::custom, arc);
        const SolveReport rep = solve_with_report(cs, f);
        std::cout << "N " << cs.degree() << "\nresidual " << g17(rep.residual_norm2) << "\ngamma "
                  << g17(rep.gamma_est) << "\ncond2 " << g17(rep.cond2) << "\nu_coeff_norm "
                  << g17(kUnitRoundoff * coeff_norm2(rep.coeffs)) << '\n';
        std::ostringstream csv;
        print_coefficients(csv, rep.coeffs);
        write_or_print(out, csv.str());
        return 0;
      }
      if (func.empty()) throw UsageError("interp needs --func or --expr-file");
      const RegisteredFunction entry = resolve_function(func, arc);
      const PanelInterpolant p = fit_panel(entry.f, arc, order + 1, family);
      std::cout << "N " << order << "\nerr_estimate " << g17(p.err_estimate) << "\nu_coeff_norm "
                << g17(p.stagnation) << "\ngamma " << g17(p.report.gamma_est) << "\ncond2 " << g17(p.report.cond2)
                << "\nframe_scale " << g17(p.frame.scale.real()) << ' ' << g17(p.frame.scale.imag())
                << "\nframe_shift " << g17(p.frame.shift.real()) << ' ' << g17(p.frame.shift.imag()) << '\n';
      std::ostringstream csv;
      print_coefficients(csv, p.poly);
      write_or_print(out, csv.str());
    } else if (*piecewise) {
      const Arc arc = resolve_arc(arc_name);
      const RegisteredFunction entry = resolve_function(func, arc);
      const PiecewiseModel model = adaptive_fit(entry.f, arc, order, eps, max_depth, family);
      std::cout << "panels " << model.stats.panel_count << "\nmax_depth " << model.stats.max_depth << "\nsolves "
                << model.stats.total_solves << "\ncoefficient_splits " << model.stats.coefficient_splits << '\n';
      std::cout << "t_lo,t_hi,err_estimate,u_coeff_norm\n";
      for (const auto& p : model.panels)
        std::cout << g17(p.piece.t_lo) << ',' << g17(p.piece.t_hi) << ',' << g17(p.err_estimate) << ','
                  << g17(p.stagnation) << '\n';
      if (!save_model.empty()) {
        std::ofstream file(save_model, std::ios::binary);
        if (!file) throw UsageError("cannot write '" + save_model + "'");
        monointerp::save_model(file, model, arc_name);
        std::cerr << "wrote " << save_model << '\n';
      }
    } else if (*rootcmd) {
      const Arc arc = resolve_arc(arc_name);
      const RegisteredFunction entry = resolve_function(func, arc);
      const RootSet rs = roots_on_arc(entry.f, arc, order, eps, band, max_depth);
      std::cout << "roots " << rs.on_arc.size() << '\n';
      char buf[160];
      for (std::size_t i = 0; i < rs.on_arc.size(); ++i) {
        if (arc.is_interval())
          std::snprintf(buf, sizeof buf, "%.12f  residual %.3e", rs.on_arc[i].real(), rs.residuals[i]);
        else
          std::snprintf(buf, sizeof buf, "%.12f %+.12fi  t %.12f  residual %.3e", rs.on_arc[i].real(),
                        rs.on_arc[i].imag(), rs.params[i], rs.residuals[i]);
        std::cout << buf << '\n';
      }
    } else if (*moments) {
      MomentTable table;
      if (kind == "fourier") {
        table = fourier_moments(za, zb, c, order);
      } else if (kind == "cauchy") {
        table = cauchy_moments(za, zb, parse_complex(xi_text), order);
      } else if (kind == "log") {
        table = log_moments(za, zb, parse_complex(xi_text), order);
      } else {
        throw UsageError("unknown moment kind '" + kind + "' (fourier | cauchy | log)");
      }
      std::cout << "k,re,im,method\n";
      for (Index k = 0; k < table.values.size(); ++k)
        std::cout << k << ',' << g17(table.values[k].real()) << ',' << g17(table.values[k].imag()) << ','
                  << to_string(table.methods[std::size_t(k)]) << '\n';
    } else if (*boundcmd) {
      const Arc arc = resolve_arc(arc_name);
      std::ostringstream csv;
      csv << "N,vinv_measured,vinv_bound,lambda_measured,lambda_bound\n";
      for (const auto& r : run_cond_curve(arc, family, n_max))
        csv << r.N << ',' << g17(r.vinv_measured) << ',' << g17(r.vinv_bound) << ',' << g17(r.lambda_measured) << ','
            << g17(r.lambda_bound) << '\n';
      write_or_print(out, csv.str());
    } else if (*figure) {
      if (!find_figure(id)) {
        std::ostringstream ids;
        for (const auto& spec : figure_catalog()) ids << ' ' << spec.id;
        throw UsageError("unknown figure id '" + id + "'; known ids:" + ids.str() + "\n" + registry_listing());
      }
      std::cout << write_figure(id, out_dir(out)) << '\n';
    } else if (*threshold) {
      std::cout << threshold_order(resolve_arc(arc_name), family) << '\n';
    }
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
