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
#include "monointerp/bounds.hpp"
#include "monointerp/figures.hpp"
#include "monointerp/panel.hpp"
#include "monointerp/registry.hpp"

using namespace monointerp;

namespace {
const Arc unit = Arc::interval(-1.0, 1.0);
const Arc zero_one = Arc::interval(0.0, 1.0);
const double sqrt2 = std::sqrt(2.0);
}  // namespace

TEST_CASE("rho of a point") {
  CHECK(rho_of_point(unit, 0.3) == 1.0);
  CHECK(rho_of_point(unit, -1.0) == 1.0);
  CHECK(rho_of_point(unit, Complex(0, 1)) == doctest::Approx(1.0 + sqrt2).epsilon(1e-14));
  CHECK(rho_of_point(unit, 2.0) == doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-14));
  CHECK(rho_of_point(unit, sqrt2) == doctest::Approx(1.0 + sqrt2).epsilon(1e-14));
  CHECK(rho_of_point(zero_one, 2.0) == doctest::Approx(rho_of_point(unit, 3.0)).epsilon(1e-14));
}

TEST_CASE("rho star of intervals") {
  CHECK(std::abs(rho_star_interval(unit) - (1.0 + sqrt2)) <= 1e-10);
  CHECK(std::abs(rho_star_interval(zero_one) - (3.0 + 2.0 * sqrt2)) <= 1e-10);
  CHECK(std::abs(rho_star_interval(Arc::interval(-2.0, 2.0)) - (1.0 + std::sqrt(5.0)) / 2.0) <= 1e-10);
  CHECK(rho_star_of(unit) == doctest::Approx(1.0 + sqrt2));
  CHECK(rho_star_of(parabola_arc(0.4, 2.6)) == 2.6);
  CHECK_THROWS_AS(rho_star_of(Arc::parametric([](double t) { return Complex(t, 0.0); })), std::invalid_argument);
}

TEST_CASE("lebesgue bound formula") {
  CHECK(leb_bound(0) == 1.0);
  CHECK(leb_bound(10) == doctest::Approx(2.5266).epsilon(1e-4));
  CHECK(leb_bound(100) == doctest::Approx(3.9381).epsilon(1e-4));
}

TEST_CASE("inverse norm bound") {
  CHECK(vinv_bound(0, 1.0, 2.0).value == 1.0);
  const double rs = 1.0 + sqrt2;
  const CollocationSet c44 = chebyshev_points(44, unit);
  const double lam = lebesgue_constant(c44, 10000);
  CHECK(vinv_bound(43, lam, rs).value >= vandermonde_inv_norm2(c44.nodes()).value);
  CHECK(vinv_bound(22, 1.0, 3.0 + 2.0 * sqrt2).value >= 1e16);
  const LogScaled huge = vinv_bound(1000, 1.0, 10.0);
  CHECK(huge.overflow);
  CHECK(huge.value == kNormCap);
  CHECK(huge.log_value == doctest::Approx(1000.0 * std::log(10.0)));
}

TEST_CASE("chebyshev convergence bound") {
  CHECK(chebyshev_convergence_bound(0.0, 2.0, 5) == 0.0);
  CHECK(chebyshev_convergence_bound(1.0, 2.0, 0) == 4.0);
  // Pole at sqrt(2): max |F| on an ellipse slightly inside rho(sqrt 2) is finite and the bound
  // sits below the measured barycentric error level at N = 40 by many orders.
  const double rho = 0.99 * (1.0 + sqrt2);
  double m = 0.0;
  for (int k = 0; k < 4096; ++k) {
    const Complex w = std::polar(rho, 2.0 * kPi * k / 4096.0);
    m = std::max(m, std::abs(1.0 / (0.5 * (w + 1.0 / w) - sqrt2)));
  }
  CHECK(chebyshev_convergence_bound(m, rho, 40) <= 1e-12);
}

TEST_CASE("coefficient norm bound") {
  CHECK(coeff_norm_bound(2.5, 0.0, 3.0, 2.0, 1.7, 20) == 2.5);
  const double rs = 1.0 + sqrt2, lam = 2.0;
  const Index n = 17;
  CHECK(coeff_norm_bound(0.5, 3.0, rs, rs, lam, n) ==
        doctest::Approx(0.5 + 3.0 * (lam + 2.0 * rs * double(n) + 1.0)).epsilon(1e-12));
  // Away from the degenerate ratio the stable sum agrees with the naive one.
  const double rho = 3.1;
  double naive = 0.0;
  for (Index j = 0; j < n; ++j) naive += std::pow(rs / rho, double(j));
  CHECK(coeff_norm_bound(1.0, 2.0, rho, rs, lam, n) ==
        doctest::Approx(1.0 + 2.0 * (lam * std::pow(rs / rho, double(n)) + 2.0 * rs * naive + 1.0)).epsilon(1e-12));

  const ComplexFunction f = find_function("cos2x1")->f;
  for (Index N = 1; N <= 43; ++N) {
    const CollocationSet cs = chebyshev_points(N + 1, unit);
    CVector vals(N + 1);
    for (Index j = 0; j <= N; ++j) vals[j] = f(cs.nodes()[j]);
    const double refined = coeff_norm2(refined_solve(build_vandermonde(cs), vals));
    CHECK(coeff_norm_bound(vals.cwiseAbs().maxCoeff(), 3.0, rs, rs, leb_bound(N), N) >= refined);
  }
}

TEST_CASE("a priori bound and sandwich") {
  CHECK(apriori_error_bound(1e-9, 0.0, 2.0, 5.0) == 1e-9);
  CHECK(apriori_error_bound(0.0, 1.0, 1.0, 1.0) == 2.0 * kUnitRoundoff);
  CHECK(sandwich_check(1.0, 1.0, 2.0));
  CHECK_FALSE(sandwich_check(1.0, 3.0, 2.0));
  CHECK(sandwich_check(1.0, 2.0 / 3.0, 2.0));
  CHECK_FALSE(sandwich_check(1.0, 0.6, 2.0));
  CHECK_THROWS_AS(sandwich_check(1.0, 1.0, 1.0), std::invalid_argument);

  const ComplexFunction f = find_function("cos8x1")->f;
  const PanelInterpolant pi = fit_panel(f, unit, 44);
  const BarycentricInterpolant bary(pi.values, pi.nodes);
  double mono = 0.0, bar = 0.0;
  for (int i = 0; i <= 10000; ++i) {
    const double x = -1.0 + 2.0 * i / 10000.0;
    mono = std::max(mono, std::abs(f(x) - eval_panel(pi, x)));
    bar = std::max(bar, std::abs(f(x) - bary(x)));
  }
  const double lam = lebesgue_constant(pi.nodes, 10000);
  CHECK(apriori_error_bound(bar, pi.report.gamma_est, lam, coeff_norm2(pi.poly)) >= mono);
}

TEST_CASE("threshold orders") {
  CHECK(std::abs(threshold_order(unit) - 43) <= 2);
  CHECK(std::abs(threshold_order(zero_one) - 22) <= 2);
  const double predicted = std::log(0x1p53) / std::log(2.6);
  CHECK(std::abs(double(threshold_order(parabola_arc(0.4))) - predicted) <= 3.0);
  // Frozen measurements.
  CHECK(threshold_order(unit) == 45);
  CHECK(threshold_order(zero_one) == 22);
  CHECK(threshold_order(parabola_arc(0.4)) == 41);
}

TEST_CASE("decay fit") {
  std::vector<Index> orders;
  std::vector<double> errors;
  for (Index n = 0; n < 30; ++n) {
    orders.push_back(n);
    errors.push_back(std::max(7.0 * std::pow(2.0, -double(n)), 1e-8));
  }
  const DecayFit fit = fit_decay(orders, errors, 1e-7);
  CHECK(fit.C == doctest::Approx(7.0).epsilon(1e-6));
  CHECK(fit.rho == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("property: rho is at least one and grows along rays") {
  gen::Source src(5001);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = src.uniform(-3.0, 2.0), b = a + src.uniform(0.1, 3.0);
    const Arc iv = Arc::interval(a, b);
    CHECK(rho_of_point(iv, src.uniform(a, b)) == 1.0);
    const Complex base = src.uniform(a, b);
    const Complex dir = std::polar(1.0, src.uniform(0.05, kPi - 0.05));
    double prev = 1.0;
    for (int k = 1; k <= 20; ++k) {
      const double r = rho_of_point(iv, base + 0.2 * k * dir);
      CHECK(r >= 1.0);
      CHECK(r >= prev);
      prev = r;
    }
  }
}

TEST_CASE("property: measured inverse norm sits below the bound and not far below") {
  for (const Arc& iv : {unit, zero_one}) {
    const double rs = rho_star_interval(iv);
    for (Index N = 0; N <= 50; ++N) {
      const CollocationSet cs = chebyshev_points(N + 1, iv);
      const double lam = lebesgue_constant(cs, 30 * (N + 1) + 1000);
      const double measured = vandermonde_inv_norm2(cs.nodes()).value;
      const double bound = vinv_bound(N, lam, rs).value;
      CHECK(measured <= bound);
      if (N <= 43 && iv.as_interval().a == -1.0) CHECK(bound <= 1e4 * measured);
    }
  }
}

TEST_CASE("property: worst-case coefficient growth for unit data vectors") {
  gen::Source src(5002);
  const double rs = 1.0 + sqrt2;
  for (int trial = 0; trial < 60; ++trial) {
    const Index N = src.integer(1, 43);
    const CollocationSet cs = chebyshev_points(N + 1, unit);
    CVector f = src.complex_vector(N + 1);
    f.normalize();
    const SolveReport r = solve_with_report(cs, f);
    const double lam = lebesgue_constant(cs, 30 * (N + 1) + 1000);
    CHECK(coeff_norm2(r.coeffs) <= std::pow(rs, double(N)) * lam * 1.01);
  }
}

TEST_CASE("property: fitted coefficient bound dominates refined coefficients") {
  const double rs = 1.0 + sqrt2;
  for (const std::string name : {"cos8x1", "cos12x1", "inv_sqrt2", "inv_half_i", "gauss", "tanx", "cos3x8"}) {
    const ComplexFunction f = find_function(name)->f;
    const auto rows = run_error_curve(f, unit, NodeFamily::chebyshev2, 43, 2000);
    // err[n] = ||F - Q_n|| on the grid with Q_n the degree-n interpolant; n = 0 uses the midpoint.
    std::vector<double> err{0.0};
    double norm_f = 0.0;
    const Complex f0 = f(0.0);
    for (int i = 0; i <= 2000; ++i) {
      const Complex v = f(-1.0 + i / 1000.0);
      norm_f = std::max(norm_f, std::abs(v));
      err[0] = std::max(err[0], std::abs(v - f0));
    }
    std::vector<Index> orders;
    std::vector<double> errors;
    for (const auto& row : rows) {
      orders.push_back(row.N), errors.push_back(row.err_barycentric);
      err.push_back(row.err_barycentric);
    }
    double rho = fit_decay(orders, errors, 1e-14).rho;
    if (std::abs(rho - rs) < 1e-6 * rs) rho = rs * (1 + 1e-6);
    double c_n = 0.0;
    for (Index N = 1; N <= 43; ++N) {
      for (Index n = std::max<Index>(0, N - 1); n <= N; ++n) c_n = std::max(c_n, err[std::size_t(n)] * std::pow(rho, double(n)));
      const CollocationSet cs = chebyshev_points(N + 1, unit);
      CVector vals(N + 1);
      for (Index j = 0; j <= N; ++j) vals[j] = f(cs.nodes()[j]);
      double refined;
      try {
        refined = coeff_norm2(refined_solve(build_vandermonde(cs), vals));
      } catch (const NumericalError&) {
        continue;
      }
      const double lam = lebesgue_constant(cs, 2000);
      CHECK_MESSAGE(coeff_norm_bound(norm_f, c_n, rho, rs, lam, N) >= refined, name << " N=" << N);
    }
  }
}
