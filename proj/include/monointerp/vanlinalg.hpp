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

#ifndef MONOINTERP_VANLINALG_HPP
#define MONOINTERP_VANLINALG_HPP

#include <vector>

#include "monointerp/nodes.hpp"
#include "monointerp/polycore.hpp"

namespace monointerp {

/// (N+1) x (N+1) matrix with entry (j, k) = z_j^k.
CMatrix build_vandermonde(const CVector& nodes);
CMatrix build_vandermonde(const CollocationSet& cs);

/// PA = LU with row partial pivoting. `lu` holds the unit lower factor below
/// the diagonal and the upper factor on and above it; row i of PA is row
/// perm[i] of A.
struct LUFactors {
  CMatrix lu;
  std::vector<Index> perm;
  double pivot_growth = 1.0;  // max |u_ij| / max |a_ij|
  double min_pivot = 0.0;     // min |u_ii|

  Index size() const { return lu.rows(); }
  CMatrix lower() const;
  CMatrix upper() const;
  CMatrix permutation() const;
};

/// Throws SingularMatrixError on an exactly zero pivot.
LUFactors lu_factor(const CMatrix& a);

CVector lu_solve_vector(const LUFactors& fac, const CVector& f);
/// Solves A^H y = f with the factors of A.
CVector lu_solve_adjoint(const LUFactors& fac, const CVector& f);
MonomialPoly lu_solve(const LUFactors& fac, const CVector& f);

/// f - A x with each entry accumulated in compensated arithmetic.
CVector compensated_residual(const CMatrix& a, const CVector& x, const CVector& f);
/// ||A x - f||_2 with compensated accumulation.
double residual_norm(const CMatrix& a, const MonomialPoly& x, const CVector& f);

struct NormEstimate {
  double value = 0.0;
  bool stale = false;     // iteration stopped before the estimate settled
  bool overflow = false;  // value capped at kNormCap
};

inline constexpr double kNormCap = 1e300;

/// Power iteration on A^H A from a fixed seeded start; a lower estimate of sigma_max.
NormEstimate norm2_estimate(const CMatrix& a, int iters = 500);

/// Inverse power iteration through the LU factors; estimates ||A^-1||_2 = 1 / sigma_min.
NormEstimate inv_norm2_estimate(const LUFactors& fac, int iters = 100);

/// Explicit inverse of the Vandermonde matrix: column j holds the monomial
/// coefficients of the Lagrange polynomial l_j, expanded from its linear
/// factors. Stays accurate well past cond(V) ~ 1/u because no linear system is
/// solved.
CMatrix vandermonde_inverse(const CVector& nodes);

/// ||V^-1||_2 by power iteration on the explicit inverse.
NormEstimate vandermonde_inv_norm2(const CVector& nodes, int iters = 500);

/// O(N^2) Vandermonde solve for real nodes: Newton divided differences, then
/// conversion of the Newton form to monomial coefficients (ascending).
template <typename Scalar>
MonomialPolynomial<Scalar> bjorck_pereyra_solve(const CollocationSet& cs,
                                                const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& f) {
  const Index n = cs.size();
  if (f.size() != n) throw std::invalid_argument("bjorck_pereyra_solve: dimension mismatch");
  RVector x(n);
  for (Index j = 0; j < n; ++j) {
    if (cs.nodes()[j].imag() != 0.0)
      throw std::invalid_argument("bjorck_pereyra_solve: complex nodes are not supported");
    x[j] = cs.nodes()[j].real();
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> c = f;
  for (Index k = 0; k + 1 < n; ++k)
    for (Index i = n - 1; i > k; --i) c[i] = (c[i] - c[i - 1]) / (x[i] - x[i - k - 1]);
  for (Index k = n - 2; k >= 0; --k)
    for (Index i = k; i + 1 < n; ++i) c[i] = c[i] - x[k] * c[i + 1];
  return MonomialPolynomial<Scalar>(std::move(c));
}

/// Refinement diverged; carries the last acceptable iterate.
class RefinementError : public NumericalError {
 public:
  RefinementError(const std::string& what, MonomialPoly last) : NumericalError(what), last_(std::move(last)) {}
  const MonomialPoly& last_iterate() const { return last_; }

 private:
  MonomialPoly last_;
};

/// LU solve followed by iterative refinement with compensated residuals. Used
/// as the reference ("exact") coefficient vector for moderately conditioned
/// systems (cond2 <= 1e15).
MonomialPoly refined_solve(const CMatrix& a, const CVector& f, int max_iters = 10);

/// Backward-error dossier of one Vandermonde solve.
struct SolveReport {
  MonomialPoly coeffs = MonomialPoly::zero(0);
  double residual_norm2 = 0.0;  // ||V a - f||_2
  double norm_V = 0.0;
  double norm_Vinv = 0.0;
  double cond2 = 0.0;
  double gamma_est = 0.0;  // residual_norm2 / (u ||a||_2), 0 when a = 0
  double unit_roundoff = kUnitRoundoff;
  double pivot_growth = 1.0;
  bool norm_Vinv_overflow = false;
  bool estimates_stale = false;
};

SolveReport solve_with_report(const CollocationSet& cs, const CVector& f);

}  // namespace monointerp

#endif  // MONOINTERP_VANLINALG_HPP
