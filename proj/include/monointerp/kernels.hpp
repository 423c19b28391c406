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

#ifndef MONOINTERP_KERNELS_HPP
#define MONOINTERP_KERNELS_HPP

#include <vector>

#include "monointerp/panel.hpp"
#include "monointerp/piecewise.hpp"

namespace monointerp {

// ---------------------------------------------------------------------------
// Rootfinding

/// Diagonal similarity by powers of two that equalizes row and column norms
/// (off-diagonal parts). Eigenvalues are unchanged.
CMatrix balance(CMatrix a);

/// Eigenvalues of an upper Hessenberg matrix by single-shift complex QR with
/// Wilkinson shifts and an exceptional shift after every 10 stalled sweeps.
/// Throws NumericalError after 30 n sweeps, listing the eigenvalues found.
CVector hessenberg_eigenvalues(CMatrix h);

/// Monic companion matrix of p after trimming leading coefficients with
/// |a_k| <= trim_tol ||a||_2: ones on the subdiagonal, last column -a_k / a_n.
CMatrix companion_matrix(const MonomialPoly& p, double trim_tol = 0.0);

struct RootSet {
  std::vector<Complex> all_roots;  // every eigenvalue, global coordinates
  std::vector<Complex> on_arc;     // accepted roots
  std::vector<double> params;      // arc parameter of each accepted root
  std::vector<double> residuals;   // |F(root)| of each accepted root
};

/// All roots of p (only all_roots is filled).
RootSet roots(const MonomialPoly& p, double trim_tol = 0.0);

/// Roots of F on an arc from an adaptive piecewise model: per-panel companion
/// eigenvalues, kept when they lie within `band` of the panel in local
/// coordinates, deduplicated across shared breakpoints.
RootSet roots_on_arc(const ComplexFunction& f, const Arc& arc, Index order, double epsilon, double band,
                     int max_depth = 30);
RootSet roots_on_arc(const PiecewiseModel& model, const ComplexFunction& f, double band);

// ---------------------------------------------------------------------------
// Moments of monomials against oscillatory and singular kernels on a chord

/// The kernel singularity lies on the integration chord.
class SingularKernelError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

enum class MomentKind { fourier, cauchy, log };
enum class MomentMethod { recurrence, closed_form, oracle_fallback };

const char* to_string(MomentKind kind);
const char* to_string(MomentMethod method);

struct MomentTable {
  MomentKind kind = MomentKind::fourier;
  double c = 0.0;        // frequency (fourier)
  Complex xi{0.0, 0.0};  // singularity (cauchy, log)
  Complex z_a{-1.0, 0.0};
  Complex z_b{1.0, 0.0};
  CVector values;        // mu_0 .. mu_N
  std::vector<MomentMethod> methods;
};

/// mu_k = int_a^b x^k e^{icx} dx. Entries with k < |c| (b - a) come from the
/// upward integration-by-parts recurrence, the rest from adaptive quadrature.
/// c = 0 is the plain monomial integral; 0 < |c| <= 1e-8 uses quadrature
/// throughout.
MomentTable fourier_moments(double z_a, double z_b, double c, Index n);

/// q_k = int z^k / (z - xi) dz along the chord from z_a to z_b. Upward
/// recurrence when |xi| <= 1, downward from a quadrature-seeded q_N otherwise.
MomentTable cauchy_moments(Complex z_a, Complex z_b, Complex xi, Index n);

/// l_k = int z^k log(z - xi) dz along the chord, with the logarithm continued
/// along the chord from its principal value at z_a.
MomentTable log_moments(Complex z_a, Complex z_b, Complex xi, Index n);

/// Moment table in the local frame of a panel for a global kernel parameter:
/// the frequency C (fourier) or the singularity Xi (cauchy, log).
MomentTable panel_moment_table(const PanelInterpolant& pi, MomentKind kind, Complex parameter);

/// Sum_k a_k mu_k plus the frame factors: the integral of F times the kernel
/// over the panel's chord in global coordinates. The table must have local
/// endpoints -1 and 1. For the log kernel the global logarithm is
/// Log(m) + the table's branch, with m the frame scale.
Complex integrate_against(const PanelInterpolant& pi, const MomentTable& table);

}  // namespace monointerp

#endif  // MONOINTERP_KERNELS_HPP
