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

#include "monointerp/registry.hpp"

#include <cstdlib>
#include <sstream>

namespace monointerp {

namespace {

std::vector<RegisteredFunction> build_registry() {
  const double sqrt2 = std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  return {
      {"cos2x1", "cos(2z+1)", [](Complex z) { return std::cos(2.0 * z + 1.0); }, false},
      {"cos8x1", "cos(8z+1)", [](Complex z) { return std::cos(8.0 * z + 1.0); }, false},
      {"cos12x1", "cos(12z+1)", [](Complex z) { return std::cos(12.0 * z + 1.0); }, false},
      {"inv_sqrt2", "1/(z-sqrt(2))", [sqrt2](Complex z) { return 1.0 / (z - sqrt2); }, false},
      {"inv_half_i", "1/(z-0.5i)", [i](Complex z) { return 1.0 / (z - 0.5 * i); }, false},
      {"abspow", "|x+0.1|^2.5", [](Complex z) { return Complex(std::pow(std::abs(z.real() + 0.1), 2.5)); }, true},
      {"abssin3", "|sin(5x)|^3", [](Complex z) { return Complex(std::pow(std::abs(std::sin(5.0 * z.real())), 3.0)); },
       true},
      {"gauss", "exp(-2(z+0.1)^2)", [](Complex z) { return std::exp(-2.0 * (z + 0.1) * (z + 0.1)); }, false},
      {"tanx", "tan(z)", [](Complex z) { return std::tan(z); }, false},
      {"cos3x8", "cos(3z^8+1)", [](Complex z) { return std::cos(3.0 * std::pow(z, 8) + 1.0); }, false},
      {"sin6x1", "sin(6z+1)", [](Complex z) { return std::sin(6.0 * z + 1.0); }, false},
      {"expz2", "exp(-z^2)", [](Complex z) { return std::exp(-z * z); }, false},
      {"inv_zm2", "1/(z-2)", [](Complex z) { return 1.0 / (z - 2.0); }, false},
      {"inv_zpi", "1/(z+i)", [i](Complex z) { return 1.0 / (z + i); }, false},
      {"tantan", "tan(tan(z)/2)", [](Complex z) { return std::tan(0.5 * std::tan(z)); }, false},
  };
}

// T_n(z) = cos(n arccos z); real arguments in [-1, 1] avoid the complex branch.
ComplexFunction chebyshev_t(int n) {
  return [n](Complex z) -> Complex {
    if (z.imag() == 0.0 && std::abs(z.real()) <= 1.0) return std::cos(n * std::acos(z.real()));
    return std::cos(double(n) * std::acos(z));
  };
}

double parse_number(const std::string& s, const std::string& context) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument("malformed number '" + s + "' in " + context);
  return v;
}

}  // namespace

const std::vector<RegisteredFunction>& function_registry() {
  static const std::vector<RegisteredFunction> registry = build_registry();
  return registry;
}

std::optional<RegisteredFunction> find_function(const std::string& name) {
  for (const auto& entry : function_registry())
    if (entry.name == name) return entry;
  const std::string prefix = "cheb_T";
  if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size()) {
    const std::string digits = name.substr(prefix.size());
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 4) {
      const int n = std::atoi(digits.c_str());
      if (n <= 1000) return RegisteredFunction{name, "T_" + digits + "(z)", chebyshev_t(n), false};
    }
  }
  return std::nullopt;
}

std::string registry_listing() {
  std::ostringstream out;
  out << "functions:\n";
  for (const auto& entry : function_registry())
    out << "  " << entry.name << "  " << entry.formula << (entry.interval_only ? "  (intervals only)" : "") << '\n';
  out << "  cheb_T<n>  T_n(z) = cos(n arccos z), e.g. cheb_T20\n";
  out << "arcs:\n  unit  [-1,1]\n  zero-one  [0,1]\n  a,b  [a,b]\n"
      << "  parabola:<alpha>[:<rho_star>]  t + i alpha (t^2-1); rho_star defaults to 2.56 (0.2), 2.6 (0.4, 0.6)\n";
  return out.str();
}

Arc parabola_arc(double alpha, std::optional<double> rho_star) {
  if (!is_finite(alpha)) throw std::invalid_argument("parabola_arc: alpha must be finite");
  return Arc::parametric([alpha](double t) { return Complex(t, alpha * (t * t - 1.0)); }, rho_star);
}

Arc arc_from_name(const std::string& d) {
  if (d == "unit") return Arc::interval(-1.0, 1.0);
  if (d == "zero-one") return Arc::interval(0.0, 1.0);
  const std::string prefix = "parabola:";
  if (d.rfind(prefix, 0) == 0) {
    const std::string rest = d.substr(prefix.size());
    const auto colon = rest.find(':');
    const double alpha = parse_number(rest.substr(0, colon), "arc '" + d + "'");
    std::optional<double> rho;
    if (colon != std::string::npos) {
      rho = parse_number(rest.substr(colon + 1), "arc '" + d + "'");
    } else if (alpha == 0.2) {
      rho = 2.56;
    } else if (alpha == 0.4 || alpha == 0.6) {
      rho = 2.6;
    }
    return parabola_arc(alpha, rho);
  }
  const auto comma = d.find(',');
  if (comma != std::string::npos) {
    const double a = parse_number(d.substr(0, comma), "arc '" + d + "'");
    const double b = parse_number(d.substr(comma + 1), "arc '" + d + "'");
    return Arc::interval(a, b);
  }
  throw std::invalid_argument("unknown arc '" + d + "'");
}

}  // namespace monointerp
