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

#include "monointerp/quadrature.hpp"

#include <algorithm>
#include <vector>

#include "monointerp/nodes.hpp"

namespace monointerp {

namespace {

struct Rule {
  RVector x, w;
};

const Rule& rule20() {
  static const Rule r = [] {
    auto [x, w] = gauss_legendre(20);
    return Rule{x, w};
  }();
  return r;
}

struct Segment {
  double a, b;
  Complex value;
  double abs_value;
  int depth;
};

std::pair<Complex, double> apply_rule(const std::function<Complex(double)>& f, double a, double b) {
  const Rule& r = rule20();
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  Complex s = 0.0;
  double sa = 0.0;
  for (Index i = 0; i < r.x.size(); ++i) {
    const Complex v = f(mid + half * r.x[i]);
    s += r.w[i] * v;
    sa += r.w[i] * std::abs(v);
  }
  return {half * s, std::abs(half) * sa};
}

}  // namespace

Complex adaptive_gauss_legendre(const std::function<Complex(double)>& f, double a, double b, double tol,
                                int max_depth) {
  if (!(a < b)) {
    if (a == b) return 0.0;
    return -adaptive_gauss_legendre(f, b, a, tol, max_depth);
  }
  auto [v0, abs0] = apply_rule(f, a, b);
  std::vector<Segment> stack{{a, b, v0, abs0, 0}};
  double scale = abs0;
  // Differences below a few dozen ulps of the scale are rounding noise.
  const double eff_tol = std::max(tol, 50.0 * kUnitRoundoff);
  Complex total = 0.0;
  while (!stack.empty()) {
    Segment s = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (s.a + s.b);
    auto [vl, al] = apply_rule(f, s.a, mid);
    auto [vr, ar] = apply_rule(f, mid, s.b);
    const Complex refined = vl + vr;
    scale = std::max(scale, al + ar);
    if (std::abs(refined - s.value) <= eff_tol * scale || s.depth >= max_depth) {
      if (!is_finite(refined)) throw NumericalError("adaptive_gauss_legendre: non-finite integrand");
      if (s.depth >= max_depth && std::abs(refined - s.value) > 1e3 * eff_tol * scale)
        throw NumericalError("adaptive_gauss_legendre: maximum subdivision depth reached");
      total += refined;
    } else {
      stack.push_back({mid, s.b, vr, ar, s.depth + 1});
      stack.push_back({s.a, mid, vl, al, s.depth + 1});
    }
  }
  return total;
}

Complex chord_integral(const ComplexFunction& f, Complex z_a, Complex z_b, double tol) {
  const Complex half = 0.5 * (z_b - z_a), mid = 0.5 * (z_a + z_b);
  auto g = [&](double s) {
    if (s == -1.0) return f(z_a);
    if (s == 1.0) return f(z_b);
    return f(mid + half * s);
  };
  return half * adaptive_gauss_legendre(g, -1.0, 1.0, tol);
}

}  // namespace monointerp
