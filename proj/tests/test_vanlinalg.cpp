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

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "doctest.h"
#include "generators.hpp"
#include "monointerp/bounds.hpp"
#include "monointerp/nodes.hpp"
#include "monointerp/vanlinalg.hpp"

using namespace monointerp;
using Wide = boost::multiprecision::cpp_bin_float_quad;

namespace {

const Arc unit = Arc::interval(-1.0, 1.0);

CVector sample(const CollocationSet& cs, const ComplexFunction& f) {
  CVector v(cs.size());
  for (Index j = 0; j < cs.size(); ++j) v[j] = f(cs.nodes()[j]);
  return v;
}

Complex cos2x1(Complex z) { return std::cos(2.0 * z + 1.0); }

CMatrix random_matrix(gen::Source& src, Index n) {
  CMatrix a(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) a(i, j) = src.complex_normal();
  return a;
}

// ||A x - f||_2 accumulated in quad precision.
double wide_residual(const CMatrix& a, const CVector& x, const CVector& f) {
  Wide total = 0;
  for (Index i = 0; i < a.rows(); ++i) {
    Wide re = -Wide(f[i].real()), im = -Wide(f[i].imag());
    for (Index j = 0; j < a.cols(); ++j) {
      const Wide ar = a(i, j).real(), ai = a(i, j).imag(), xr = x[j].real(), xi = x[j].imag();
      re += ar * xr - ai * xi;
      im += ar * xi + ai * xr;
    }
    total += re * re + im * im;
  }
  return static_cast<double>(sqrt(total));
}

}  // namespace

TEST_CASE("vandermonde construction") {
  CVector z(2);
  z << -1.0, 1.0;
  CMatrix expected(2, 2);
  expected << 1.0, -1.0, 1.0, 1.0;
  CHECK(build_vandermonde(z) == expected);
  CVector one(1);
  one << Complex(3, 4);
  CHECK(build_vandermonde(one) == CMatrix::Ones(1, 1));
  CVector three(3);
  three << 0.0, 1.0, 2.0;
  const CMatrix v = build_vandermonde(three);
  CHECK(v.col(2) == CVector((CVector(3) << 0.0, 1.0, 4.0).finished()));
}

TEST_CASE("lu factorization examples") {
  const LUFactors id = lu_factor(CMatrix::Identity(4, 4));
  CHECK(id.lower() == CMatrix::Identity(4, 4));
  CHECK(id.upper() == CMatrix::Identity(4, 4));
  CHECK(id.perm == std::vector<Index>{0, 1, 2, 3});

  CMatrix swap(2, 2);
  swap << 0.0, 1.0, 1.0, 0.0;
  const LUFactors s = lu_factor(swap);
  CHECK(s.perm == std::vector<Index>{1, 0});
  CHECK((s.permutation() * swap - s.lower() * s.upper()).norm() == 0.0);

  CHECK_THROWS_AS(lu_factor(CMatrix::Zero(3, 3)), SingularMatrixError);
  CHECK_THROWS_AS(lu_factor(CMatrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("lu solve examples") {
  CVector z(2);
  z << -1.0, 1.0;
  CVector f(2);
  f << 0.0, 2.0;
  const MonomialPoly a = lu_solve(lu_factor(build_vandermonde(z)), f);
  CHECK(std::abs(a[0] - 1.0) <= 1e-15);
  CHECK(std::abs(a[1] - 1.0) <= 1e-15);

  const CollocationSet cs = chebyshev_points(8, unit);
  const CMatrix v = build_vandermonde(cs);
  const LUFactors fac = lu_factor(v);
  for (Index k = 0; k < 8; ++k) {
    const MonomialPoly e = lu_solve(fac, v.col(k));
    CHECK((e.coeffs() - CVector::Unit(8, k)).norm() <= 1e-12);
  }

  const CollocationSet c11 = chebyshev_points(11, unit);
  const SolveReport r = solve_with_report(c11, sample(c11, cos2x1));
  CHECK(r.residual_norm2 <= 100.0 * kUnitRoundoff * coeff_norm2(r.coeffs));
}

TEST_CASE("residual norm") {
  CMatrix a(2, 2);
  a << 2.0, 1.0, 1.0, 3.0;
  CVector f(2);
  f << 5.0, 10.0;
  CHECK(residual_norm(a, MonomialPoly{1.0, 3.0}, f) == 0.0);
  const double delta = 1e-7;
  CHECK(residual_norm(a, MonomialPoly{1.0 + delta, 3.0}, f) ==
        doctest::Approx(delta * std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("compensated residual matches a quad-precision oracle") {
  gen::Source src(3001);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix a = random_matrix(src, 20);
    const CVector x = src.complex_vector(20);
    const CVector f = a * x + 1e-10 * src.complex_vector(20);
    const double oracle = wide_residual(a, x, f);
    CHECK(std::abs(residual_norm(a, MonomialPoly(x), f) - oracle) <= 4.0 * kUnitRoundoff * oracle);
  }
}

TEST_CASE("2-norm estimates") {
  CHECK(norm2_estimate(CMatrix::Identity(5, 5)).value == doctest::Approx(1.0).epsilon(1e-12));
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 0.5;
  CHECK(norm2_estimate(d).value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(inv_norm2_estimate(lu_factor(CMatrix::Identity(5, 5))).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(inv_norm2_estimate(lu_factor(d)).value == doctest::Approx(2.0).epsilon(1e-12));

  const CMatrix v = build_vandermonde(chebyshev_points(20, unit));
  const double sigma = Eigen::JacobiSVD<CMatrix>(v).singularValues()[0];
  CHECK(std::abs(norm2_estimate(v).value - sigma) <= 1e-6 * sigma);
}

TEST_CASE("inverse norm near the threshold order") {
  const CollocationSet c44 = chebyshev_points(44, unit);
  CHECK(inv_norm2_estimate(lu_factor(build_vandermonde(c44))).value >= 1e14);
  CHECK(vandermonde_inv_norm2(c44.nodes()).value >= 1e14);
  // Reference values from a 100-digit Lagrange-coefficient inverse.
  const double v44 = vandermonde_inv_norm2(c44.nodes()).value;
  const double v45 = vandermonde_inv_norm2(chebyshev_points(45, unit).nodes()).value;
  const double v47 = vandermonde_inv_norm2(chebyshev_points(47, unit).nodes()).value;
  CHECK(v44 == doctest::Approx(8.545655e14).epsilon(1e-6));
  CHECK(v45 == doctest::Approx(2.028142e15).epsilon(1e-6));
  CHECK(v47 == doctest::Approx(1.143650e16).epsilon(1e-6));
  CHECK(v45 <= 1.0 / kUnitRoundoff);
  CHECK(v47 > 1.0 / kUnitRoundoff);
  CHECK(v47 <= 100.0 / kUnitRoundoff);
}

TEST_CASE("explicit inverse agrees with the LU route while conditioning is moderate") {
  for (Index n : {5, 15, 25}) {
    const CollocationSet cs = chebyshev_points(n, unit);
    const double lu_route = inv_norm2_estimate(lu_factor(build_vandermonde(cs))).value;
    const double explicit_route = vandermonde_inv_norm2(cs.nodes()).value;
    CHECK(std::abs(lu_route - explicit_route) <= 1e-6 * explicit_route);
    const CMatrix prod = vandermonde_inverse(cs.nodes()) * build_vandermonde(cs);
    CHECK((prod - CMatrix::Identity(n, n)).norm() <= 100.0 * kUnitRoundoff * explicit_route * norm2_estimate(build_vandermonde(cs)).value);
  }
}

TEST_CASE("bjorck-pereyra solver") {
  CVector z(2);
  z << -1.0, 1.0;
  const CollocationSet two(z, (RVector(2) << -1.0, 1.0).finished(), NodeFamily::custom, unit);
  const RealMonomialPoly p = bjorck_pereyra_solve(two, RVector((RVector(2) << 0.0, 2.0).finished()));
  CHECK(p[0] == doctest::Approx(1.0));
  CHECK(p[1] == doctest::Approx(1.0));

  const CollocationSet c6 = chebyshev_points(6, unit);
  const RealMonomialPoly exact{3.0, -2.0, 0.0, 5.0, 1.0, -4.0};
  RVector f(6);
  for (Index j = 0; j < 6; ++j) f[j] = eval_horner(exact, c6.nodes()[j].real());
  const RealMonomialPoly got = bjorck_pereyra_solve(c6, f);
  CHECK((got.coeffs() - exact.coeffs()).norm() <= 1e-12);

  const CollocationSet c21 = chebyshev_points(21, unit);
  const CVector fc = sample(c21, cos2x1);
  const CMatrix v = build_vandermonde(c21);
  const double lu_res = residual_norm(v, lu_solve(lu_factor(v), fc), fc);
  const double bp_res = residual_norm(v, bjorck_pereyra_solve(c21, fc), fc);
  CHECK(bp_res <= 10.0 * std::max(lu_res, kUnitRoundoff));

  const CollocationSet bent = collocation_points(5, Arc::parametric([](double t) { return Complex(t, t * t); }),
                                                 NodeFamily::chebyshev2);
  CHECK_THROWS_AS(bjorck_pereyra_solve(bent, CVector(CVector::Ones(5))), std::invalid_argument);
}

TEST_CASE("iterative refinement") {
  CMatrix a(5, 5);
  a << 4, 1, 0, 0, 0, 1, 4, 1, 0, 0, 0, 1, 4, 1, 0, 0, 0, 1, 4, 1, 0, 0, 0, 1, 4;
  const CVector x = (CVector(5) << 1, -2, 3, -4, 5).finished();
  const MonomialPoly r = refined_solve(a, a * x);
  CHECK((r.coeffs() - x).norm() <= 1e-15);

  const CollocationSet c31 = chebyshev_points(31, unit);
  const CVector f = sample(c31, cos2x1);
  const CMatrix v = build_vandermonde(c31);
  const double plain = coeff_norm2(lu_solve(lu_factor(v), f));
  const double refined = coeff_norm2(refined_solve(v, f));
  CHECK(plain >= 2.0 / 3.0 * refined);
  CHECK(plain <= 2.0 * refined);
}

TEST_CASE("solve report") {
  const CollocationSet c21 = chebyshev_points(21, unit);
  const SolveReport zero = solve_with_report(c21, CVector::Zero(21));
  CHECK(coeff_norm2(zero.coeffs) == 0.0);
  CHECK(zero.residual_norm2 == 0.0);
  CHECK(zero.gamma_est == 0.0);

  const SolveReport r = solve_with_report(c21, sample(c21, cos2x1));
  CHECK(r.gamma_est <= 100.0);
  CHECK(r.unit_roundoff == 0x1p-53);
  CHECK(r.cond2 == doctest::Approx(r.norm_V * r.norm_Vinv));

  const CollocationSet c44 = chebyshev_points(44, unit);
  const SolveReport r43 = solve_with_report(c44, sample(c44, cos2x1));
  CHECK(r43.cond2 >= 1e14);
  CHECK(r43.cond2 <= 1e17);
}

TEST_CASE("property: LU reconstruction on random and vandermonde matrices") {
  gen::Source src(3002);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = src.integer(1, 40);
    const CMatrix a = trial % 2 ? random_matrix(src, n) : build_vandermonde(src.complex_vector(n) * 0.5);
    const LUFactors fac = lu_factor(a);
    std::vector<Index> sorted = fac.perm;
    std::sort(sorted.begin(), sorted.end());
    for (Index i = 0; i < n; ++i) CHECK(sorted[std::size_t(i)] == i);
    const double err = (fac.permutation() * a - fac.lower() * fac.upper()).cwiseAbs().maxCoeff();
    CHECK(err <= 50.0 * double(n) * kUnitRoundoff * a.cwiseAbs().maxCoeff() * std::max(1.0, fac.pivot_growth));
  }
  gen::Source big(3003);
  const CMatrix a = random_matrix(big, 30);
  const LUFactors fac = lu_factor(a);
  CHECK((fac.permutation() * a - fac.lower() * fac.upper()).cwiseAbs().maxCoeff() <= 1e-13 * a.cwiseAbs().maxCoeff());
}

TEST_CASE("property: perturbed solutions stay inside the sandwich") {
  gen::Source src(3004);
  int held = 0, total = 0;
  for (double alpha : {2.0, 4.0, 10.0}) {
    const int cases = alpha == 10.0 ? 166 : 167;
    for (int trial = 0; trial < cases; ++trial, ++total) {
      const CMatrix a = random_matrix(src, 20);
      const CVector b = src.complex_vector(20);
      const double sigma_min = Eigen::JacobiSVD<CMatrix>(a).singularValues()[19];
      // Rank-one perturbation with ||A^{-1}|| ||dA|| = s / alpha, s in (0, 1].
      CVector p = src.complex_vector(20), q = src.complex_vector(20);
      p.normalize();
      q.normalize();
      const double s = src.uniform(0.05, 1.0);
      const CMatrix da = (s * sigma_min / alpha) * p * q.adjoint();
      const CVector x = a.fullPivLu().solve(b);
      const CVector xhat = (a + da).fullPivLu().solve(b);
      held += sandwich_check(x.norm(), xhat.norm(), alpha);
    }
  }
  CHECK(total == 500);
  CHECK(held == 500);
}

TEST_CASE("property: backward error stays small for every node family below the threshold") {
  const std::vector<Arc> arcs{unit, Arc::parametric([](double t) { return Complex(0.7 * t, 0.2 * (t * t - 1)); })};
  gen::Source src(3005);
  for (const Arc& arc : arcs)
    for (NodeFamily fam : {NodeFamily::chebyshev2, NodeFamily::chebyshev1, NodeFamily::legendre})
      for (Index n = 1; n <= 43; n += 6) {
        const CollocationSet cs = collocation_points(n + 1, arc, fam);
        const Complex shift = src.complex_normal();
        const SolveReport r = solve_with_report(cs, sample(cs, [&](Complex z) { return std::exp(z + shift); }));
        CHECK(r.gamma_est <= 100.0);
      }
}

TEST_CASE("property: condition number is at least one") {
  gen::Source src(3006);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = random_matrix(src, src.integer(2, 25));
    CHECK(norm2_estimate(a).value * inv_norm2_estimate(lu_factor(a)).value >= 1.0 - 1e-12);
  }
}

TEST_CASE("property: refinement never increases the residual") {
  gen::Source src(3007);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = src.integer(3, 30);
    const CVector z = src.complex_vector(n) * 0.4;
    const CMatrix v = build_vandermonde(z);
    if (inv_norm2_estimate(lu_factor(v)).value * norm2_estimate(v).value > 1e15) continue;
    const CVector f = src.complex_vector(n);
    const double plain = residual_norm(v, lu_solve(lu_factor(v), f), f);
    const double refined = residual_norm(v, refined_solve(v, f), f);
    CHECK(refined <= plain * (1.0 + 1e-12) + 1e-300);
  }
}
