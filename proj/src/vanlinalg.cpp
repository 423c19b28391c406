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

#include "monointerp/vanlinalg.hpp"

#include <algorithm>
#include <random>

#include "monointerp/detail/compensated.hpp"

namespace monointerp {

CMatrix build_vandermonde(const CVector& nodes) {
  const Index n = nodes.size();
  CMatrix v(n, n);
  for (Index j = 0; j < n; ++j) {
    Complex power = 1.0;
    for (Index k = 0; k < n; ++k) {
      v(j, k) = power;
      power *= nodes[j];
    }
  }
  return v;
}

CMatrix build_vandermonde(const CollocationSet& cs) { return build_vandermonde(cs.nodes()); }

// ---------------------------------------------------------------------------
// LU with partial pivoting

LUFactors lu_factor(const CMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("lu_factor: matrix must be square");
  if (!all_finite(a.reshaped())) throw std::invalid_argument("lu_factor: non-finite entry");
  const Index n = a.rows();
  LUFactors fac;
  fac.lu = a;
  fac.perm.resize(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) fac.perm[static_cast<std::size_t>(i)] = i;
  CMatrix& m = fac.lu;

  for (Index k = 0; k < n; ++k) {
    Index pivot = k;
    double best = std::abs(m(k, k));
    for (Index i = k + 1; i < n; ++i) {
      const double v = std::abs(m(i, k));
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (best == 0.0) throw SingularMatrixError("lu_factor: exact zero pivot in column " + std::to_string(k));
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      std::swap(fac.perm[static_cast<std::size_t>(k)], fac.perm[static_cast<std::size_t>(pivot)]);
    }
    const Complex inv = 1.0 / m(k, k);
    for (Index i = k + 1; i < n; ++i) {
      m(i, k) *= inv;
      const Complex l = m(i, k);
      if (l == Complex(0.0)) continue;
      for (Index j = k + 1; j < n; ++j) m(i, j) -= l * m(k, j);
    }
  }

  double max_a = 0.0, max_u = 0.0, min_pivot = std::abs(m(0, 0));
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) {
      max_a = std::max(max_a, std::abs(a(i, j)));
      if (i <= j) max_u = std::max(max_u, std::abs(m(i, j)));
    }
  for (Index i = 0; i < n; ++i) min_pivot = std::min(min_pivot, std::abs(m(i, i)));
  fac.pivot_growth = max_a > 0.0 ? max_u / max_a : 1.0;
  fac.min_pivot = min_pivot;
  return fac;
}

CMatrix LUFactors::lower() const {
  CMatrix l = lu.triangularView<Eigen::StrictlyLower>();
  l.diagonal().setOnes();
  return l;
}

CMatrix LUFactors::upper() const { return lu.triangularView<Eigen::Upper>(); }

CMatrix LUFactors::permutation() const {
  const Index n = size();
  CMatrix p = CMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) p(i, perm[static_cast<std::size_t>(i)]) = 1.0;
  return p;
}

CVector lu_solve_vector(const LUFactors& fac, const CVector& f) {
  const Index n = fac.size();
  if (f.size() != n) throw std::invalid_argument("lu_solve: dimension mismatch");
  CVector x(n);
  for (Index i = 0; i < n; ++i) x[i] = f[fac.perm[static_cast<std::size_t>(i)]];
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < i; ++j) x[i] -= fac.lu(i, j) * x[j];
  for (Index i = n - 1; i >= 0; --i) {
    for (Index j = i + 1; j < n; ++j) x[i] -= fac.lu(i, j) * x[j];
    x[i] /= fac.lu(i, i);
  }
  return x;
}

CVector lu_solve_adjoint(const LUFactors& fac, const CVector& f) {
  // A = P^T L U, so A^H y = f is U^H L^H P y = f.
  const Index n = fac.size();
  if (f.size() != n) throw std::invalid_argument("lu_solve_adjoint: dimension mismatch");
  CVector w = f;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < i; ++j) w[i] -= std::conj(fac.lu(j, i)) * w[j];
    w[i] /= std::conj(fac.lu(i, i));
  }
  for (Index i = n - 1; i >= 0; --i)
    for (Index j = i + 1; j < n; ++j) w[i] -= std::conj(fac.lu(j, i)) * w[j];
  CVector y(n);
  for (Index i = 0; i < n; ++i) y[fac.perm[static_cast<std::size_t>(i)]] = w[i];
  return y;
}

MonomialPoly lu_solve(const LUFactors& fac, const CVector& f) {
  CVector x = lu_solve_vector(fac, f);
  if (!all_finite(x)) throw NumericalError("lu_solve: solution overflowed");
  return MonomialPoly(std::move(x));
}

// ---------------------------------------------------------------------------
// Residuals

CVector compensated_residual(const CMatrix& a, const CVector& x, const CVector& f) {
  if (a.cols() != x.size() || a.rows() != f.size()) throw std::invalid_argument("residual: dimension mismatch");
  CVector r(a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
    detail::ComplexCompensatedSum acc;
    acc.add(f[i]);
    for (Index k = 0; k < a.cols(); ++k) acc.add_product(-a(i, k), x[k]);
    r[i] = acc.value();
  }
  return r;
}

double residual_norm(const CMatrix& a, const MonomialPoly& x, const CVector& f) {
  return compensated_residual(a, x.coeffs(), f).norm();
}

// ---------------------------------------------------------------------------
// Norm estimates

namespace {

constexpr std::uint64_t kSeed = 0x6d6f6e6f6d69616cULL;

CVector seeded_start(Index n) {
  std::mt19937_64 rng(kSeed);
  std::normal_distribution<double> normal;
  CVector x(n);
  for (Index i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    x[i] = Complex(re, im);
  }
  return x / x.norm();
}

// Generic power iteration on B^H B, given x -> B x and y -> B^H y.
template <typename Apply, typename ApplyAdjoint>
NormEstimate power_iteration(Index n, int iters, Apply apply, ApplyAdjoint apply_adjoint) {
  NormEstimate out;
  if (n == 0) return out;
  CVector x = seeded_start(n);
  double previous = 0.0;
  out.stale = true;
  for (int it = 0; it < std::max(iters, 1); ++it) {
    const CVector y = apply(x);
    const double estimate = y.norm();
    if (!std::isfinite(estimate)) {
      out.value = kNormCap;
      out.overflow = true;
      out.stale = false;
      return out;
    }
    out.value = std::max(out.value, estimate);
    if (estimate == 0.0) {
      out.stale = false;
      break;
    }
    if (it >= 2 && std::abs(estimate - previous) <= 1e-15 * estimate) {
      out.stale = false;
      break;
    }
    previous = estimate;
    CVector z = apply_adjoint(y);
    const double zn = z.norm();
    if (!(zn > 0.0) || !std::isfinite(zn)) {
      out.stale = !std::isfinite(zn);
      break;
    }
    x = z / zn;
  }
  if (out.value > kNormCap) {
    out.value = kNormCap;
    out.overflow = true;
  }
  return out;
}

}  // namespace

NormEstimate norm2_estimate(const CMatrix& a, int iters) {
  if (a.rows() != a.cols()) throw std::invalid_argument("norm2_estimate: matrix must be square");
  return power_iteration(
      a.cols(), iters, [&](const CVector& x) -> CVector { return a * x; },
      [&](const CVector& y) -> CVector { return a.adjoint() * y; });
}

NormEstimate inv_norm2_estimate(const LUFactors& fac, int iters) {
  return power_iteration(
      fac.size(), iters, [&](const CVector& x) { return lu_solve_vector(fac, x); },
      [&](const CVector& y) { return lu_solve_adjoint(fac, y); });
}

CMatrix vandermonde_inverse(const CVector& nodes) {
  const Index n = nodes.size();
  CMatrix w(n, n);
  CVector c(n);
  for (Index j = 0; j < n; ++j) {
    c.setZero();
    c[0] = 1.0;
    Index degree = 0;
    Complex denominator = 1.0;
    for (Index k = 0; k < n; ++k) {
      if (k == j) continue;
      for (Index m = degree + 1; m >= 1; --m) c[m] = c[m - 1] - nodes[k] * c[m];
      c[0] = -nodes[k] * c[0];
      ++degree;
      denominator *= nodes[j] - nodes[k];
    }
    if (denominator == Complex(0.0)) throw SingularMatrixError("vandermonde_inverse: coincident nodes");
    w.col(j) = c / denominator;
  }
  return w;
}

NormEstimate vandermonde_inv_norm2(const CVector& nodes, int iters) {
  const CMatrix w = vandermonde_inverse(nodes);
  if (!all_finite(w)) return NormEstimate{kNormCap, false, true};
  return norm2_estimate(w, iters);
}

// ---------------------------------------------------------------------------
// Iterative refinement

MonomialPoly refined_solve(const CMatrix& a, const CVector& f, int max_iters) {
  const LUFactors fac = lu_factor(a);
  CVector x = lu_solve_vector(fac, f);
  if (!all_finite(x)) throw NumericalError("refined_solve: initial solve overflowed");
  double previous_correction = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_iters; ++it) {
    const CVector r = compensated_residual(a, x, f);
    const CVector d = lu_solve_vector(fac, r);
    const double dn = d.norm();
    if (!std::isfinite(dn)) throw RefinementError("refined_solve: non-finite correction", MonomialPoly(x));
    if (dn > previous_correction && dn > x.norm())
      throw RefinementError("refined_solve: corrections are growing", MonomialPoly(x));
    if (dn > 0.5 * previous_correction) break;
    x += d;
    previous_correction = dn;
    if (dn <= kUnitRoundoff * x.norm()) break;
  }
  return MonomialPoly(std::move(x));
}

SolveReport solve_with_report(const CollocationSet& cs, const CVector& f) {
  if (f.size() != cs.size()) throw std::invalid_argument("solve_with_report: |f| != |nodes|");
  if (!all_finite(f)) throw std::invalid_argument("solve_with_report: non-finite right-hand side");
  const CMatrix v = build_vandermonde(cs);
  const LUFactors fac = lu_factor(v);
  SolveReport report;
  report.coeffs = lu_solve(fac, f);
  report.pivot_growth = fac.pivot_growth;
  report.residual_norm2 = residual_norm(v, report.coeffs, f);
  const NormEstimate nv = norm2_estimate(v);
  const NormEstimate ninv = vandermonde_inv_norm2(cs.nodes());
  report.norm_V = nv.value;
  report.norm_Vinv = ninv.value;
  report.norm_Vinv_overflow = ninv.overflow;
  report.estimates_stale = nv.stale || ninv.stale;
  report.cond2 = report.norm_V * report.norm_Vinv;
  const double an = coeff_norm2(report.coeffs);
  report.gamma_est = an > 0.0 ? report.residual_norm2 / (kUnitRoundoff * an) : 0.0;
  return report;
}

}  // namespace monointerp
