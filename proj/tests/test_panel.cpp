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

#include "doctest.h"
#include "generators.hpp"
#include "monointerp/panel.hpp"
#include "monointerp/registry.hpp"

using namespace monointerp;

namespace {

const Arc unit = Arc::interval(-1.0, 1.0);

double dense_error(const PanelInterpolant& pi, const ComplexFunction& f, double a, double b, Index m) {
  double worst = 0.0;
  for (Index i = 0; i <= m; ++i) {
    const double x = a + (b - a) * double(i) / double(m);
    worst = std::max(worst, std::abs(f(x) - eval_panel(pi, x)));
  }
  return worst;
}

ComplexFunction named(const char* name) { return find_function(name)->f; }

}  // namespace

TEST_CASE("affine frame round trip") {
  const AffineFrame fr{Complex(0.5, 0.25), Complex(-1.0, 2.0)};
  const Complex s(0.3, -0.7);
  CHECK(std::abs(fr.to_local(fr.to_global(s)) - s) <= 1e-15);
  const AffineFrame chord = chord_frame(ArcPiece(Arc::interval(2.0, 6.0)));
  CHECK(chord.scale == Complex(2.0));
  CHECK(chord.shift == Complex(4.0));
  const AffineFrame full = chord_frame(ArcPiece(parabola_arc(0.4)));
  CHECK(full.scale == Complex(1.0));
  CHECK(full.shift == Complex(0.0));
}

TEST_CASE("linear function is reproduced exactly") {
  const PanelInterpolant pi = fit_panel([](Complex z) { return 3.0 * z + 1.0; }, unit, 2);
  CHECK(std::abs(pi.poly[0] - 1.0) <= 1e-15);
  CHECK(std::abs(pi.poly[1] - 3.0) <= 1e-15);
  CHECK(pi.err_estimate <= 1e-14);
}

TEST_CASE("smooth function at N = 30") {
  const PanelInterpolant pi = fit_panel(named("cos2x1"), unit, 31);
  CHECK(dense_error(pi, named("cos2x1"), -1.0, 1.0, 10000) <= 1e-13);
  CHECK(stagnation_estimate(pi) <= 1e-13);
}

TEST_CASE("oscillatory function stagnates at the coefficient level") {
  const PanelInterpolant pi = fit_panel(named("cos12x1"), unit, 44);
  const double err = dense_error(pi, named("cos12x1"), -1.0, 1.0, 10000);
  CHECK(err >= 1e-13);
  CHECK(err <= 1e-10);
  CHECK(err >= 0.1 * pi.stagnation);
  CHECK(pi.stagnation >= 1e-13);
  CHECK(pi.stagnation <= 1e-10);
}

TEST_CASE("panel evaluation") {
  const PanelInterpolant c = fit_panel([](Complex) { return Complex(2.5, -1.0); }, unit, 5);
  for (double x : {-3.0, -1.0, 0.2, 1.0, 4.0}) CHECK(std::abs(eval_panel(c, x) - Complex(2.5, -1.0)) <= 1e-14);
  const PanelInterpolant sq = fit_panel([](Complex z) { return z * z; }, Arc::interval(0.0, 1.0), 3);
  CHECK(std::abs(eval_panel(sq, 0.5) - 0.25) <= 1e-14);
  CHECK(outside_panel(sq, 1.5));
  CHECK_FALSE(outside_panel(sq, 0.5));

  const PanelInterpolant pi = fit_panel(named("cos2x1"), unit, 21);
  const BarycentricInterpolant bary = barycentric_reference(pi.values, pi.nodes);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = -0.9995 + 1.999 * i / 999.0;
    worst = std::max(worst, std::abs(eval_panel(pi, x) - bary(x)));
  }
  CHECK(worst <= 10.0 * std::max(pi.err_estimate, 1e-15));
}

TEST_CASE("fit rejects bad orders and non-finite samples") {
  CHECK_THROWS_AS(fit_panel(named("cos2x1"), unit, 1), std::invalid_argument);
  CHECK_THROWS_AS(fit_panel(named("cos2x1"), unit, 62), std::invalid_argument);
  CHECK_THROWS_AS(fit_panel([](Complex z) { return 1.0 / z; }, unit, 3), NumericalError);
}

TEST_CASE("barycentric evaluator") {
  const CollocationSet cs = chebyshev_points(31, unit);
  CVector vals(31);
  for (Index j = 0; j < 31; ++j) vals[j] = named("cos2x1")(cs.nodes()[j]);
  const BarycentricInterpolant b(vals, cs);
  for (Index j = 0; j < 31; ++j) CHECK(b(cs.nodes()[j]) == vals[j]);
  double worst = 0.0;
  for (int i = 0; i <= 10000; ++i) {
    const double x = -1.0 + 2.0 * i / 10000.0;
    worst = std::max(worst, std::abs(b(x) - named("cos2x1")(x)));
  }
  CHECK(worst <= 5e-15);

  const MonomialPoly p{1.0, -2.0, 0.5, 3.0};
  const CollocationSet c4 = chebyshev_points(4, unit);
  CVector pv(4);
  for (Index j = 0; j < 4; ++j) pv[j] = eval_horner(p, c4.nodes()[j]);
  const BarycentricInterpolant bp(pv, c4);
  for (Index j = 0; j + 1 < 4; ++j) {
    const Complex mid = 0.5 * (c4.nodes()[j] + c4.nodes()[j + 1]);
    CHECK(std::abs(bp(mid) - eval_horner(p, mid)) <= 1e-13);
  }
}

TEST_CASE("error estimate") {
  const PanelInterpolant pi = fit_panel([](Complex z) { return 1.0 + z * z * z; }, unit, 6);
  CHECK(error_estimate(pi, [](Complex z) { return 1.0 + z * z * z; }, 100) <= 1e-13 * (1 + coeff_norm2(pi.poly)));
  const PanelInterpolant osc = fit_panel(named("cos8x1"), unit, 20);
  const double coarse = error_estimate(osc, named("cos8x1"), 1000);
  const double fine = error_estimate(osc, named("cos8x1"), 10000);
  CHECK(fine >= coarse - 1e-15);
  CHECK_THROWS_AS(error_estimate(osc, named("cos8x1"), 39), std::invalid_argument);

  const PanelInterpolant p43 = fit_panel(named("cos8x1"), unit, 44);
  const double est = error_estimate(p43, named("cos8x1"), 10000);
  const double oracle = dense_error(p43, named("cos8x1"), -1.0, 1.0, 100000);
  CHECK(est <= oracle * (1 + 1e-12));
  CHECK(est * 5.0 >= oracle);
}

TEST_CASE("stagnation estimate") {
  const PanelInterpolant z = fit_panel([](Complex) { return Complex(0.0); }, unit, 4);
  CHECK(stagnation_estimate(z) == 0.0);
  CHECK(stagnation_estimate(fit_panel(named("cos2x1"), unit, 31)) <= 1e-13);
}

TEST_CASE("parametric pieces use a chord frame") {
  const Arc par = parabola_arc(0.4);
  const ArcPiece right(par, 0.0, 1.0);
  const PanelInterpolant pi = fit_panel(named("expz2"), right, 21);
  CHECK(pi.err_estimate <= 1e-13);
  for (double t : {0.0, 0.3, 0.77, 1.0})
    CHECK(std::abs(eval_panel_at_param(pi, t) - named("expz2")(par.point(t))) <= 1e-13);
  CHECK(pi.max_local_radius >= 1.0);
  CHECK(pi.max_local_radius <= 1.1);
}

TEST_CASE("property: polynomials of degree at most N are reproduced") {
  gen::Source src(4001);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = src.integer(1, 30);
    const MonomialPoly p = src.poly(src.integer(0, n));
    const double a = src.uniform(-0.5, 0.0), b = a + src.uniform(0.2, 0.5);
    const Arc iv = Arc::interval(a, b);
    const ComplexFunction f = [&](Complex z) { return eval_horner(p, z); };
    const PanelInterpolant pi = fit_panel(f, iv, n + 1);
    CHECK(pi.err_estimate <= 1e-12 * (1.0 + coeff_norm2(p)));
  }
}

TEST_CASE("property: local coefficients do not depend on where the interval sits") {
  gen::Source src(4002);
  for (int trial = 0; trial < 25; ++trial) {
    const double a = src.uniform(-4.0, 4.0), h = src.uniform(0.1, 3.0);
    const Index n = src.integer(2, 30);
    const Complex shift = src.complex_normal();
    const ComplexFunction f = [&](Complex z) { return std::exp(0.5 * z + shift); };
    const Arc iv = Arc::interval(a, a + 2 * h);
    const PanelInterpolant global = fit_panel(f, iv, n);
    // F composed with the interval's own affine map.
    const ComplexFunction g = [&](Complex s) { return f(iv.point(s.real())); };
    const PanelInterpolant local = fit_panel(g, unit, n);
    CHECK((global.poly.coeffs() - local.poly.coeffs()).norm() <= 1e-13 * local.poly.coeffs().norm());
  }
}

TEST_CASE("property: monomial error splits into interpolation and backward-error parts") {
  for (const char* name : {"cos2x1", "cos8x1", "cos12x1", "inv_sqrt2", "inv_half_i", "gauss"})
    for (Index n = 5; n <= 43; n += 7) {
      const ComplexFunction f = named(name);
      const PanelInterpolant pi = fit_panel(f, unit, n + 1);
      const BarycentricInterpolant bary(pi.values, pi.nodes);
      double mono = 0.0, bar = 0.0;
      for (int i = 0; i <= 2000; ++i) {
        const double x = -1.0 + 2.0 * i / 2000.0;
        mono = std::max(mono, std::abs(f(x) - eval_panel(pi, x)));
        bar = std::max(bar, std::abs(f(x) - bary(x)));
      }
      const double lam = lebesgue_constant(pi.nodes, 2001);
      // The last term allows for rounding in evaluating F and both interpolants.
      CHECK(mono <= bar + pi.report.gamma_est * kUnitRoundoff * lam * coeff_norm2(pi.poly) * 1.01 +
                        8.0 * kUnitRoundoff * pi.values.cwiseAbs().maxCoeff());
    }
}

TEST_CASE("property: stagnation level matches the refined coefficient norm") {
  for (const char* name : {"cos2x1", "cos8x1", "gauss", "inv_sqrt2"})
    for (Index n = 4; n <= 40; n += 6) {
      const PanelInterpolant pi = fit_panel(named(name), unit, n + 1);
      const double refined = kUnitRoundoff * coeff_norm2(refined_solve(build_vandermonde(pi.nodes), pi.values));
      CHECK(pi.stagnation >= 2.0 / 3.0 * refined);
      CHECK(pi.stagnation <= 2.0 * refined);
    }
}
