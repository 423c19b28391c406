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

#include <algorithm>
#include <limits>
#include <sstream>
#include <vector>

#include "monointerp/kernels.hpp"

namespace monointerp {

CMatrix balance(CMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("balance: matrix must be square");
  const Index n = a.rows();
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Index i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      while (c < r / 2.0) c *= 2.0, r /= 2.0, f *= 2.0;
      while (c >= r * 2.0) c /= 2.0, r *= 2.0, f /= 2.0;
      if (c + r < 0.95 * s) {
        converged = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
  return a;
}

namespace {

struct Rotation {
  double c;
  Complex s;
};

// Unitary G = [c s; -conj(s) c] with G [x; y] = [r; 0].
Rotation make_rotation(Complex x, Complex y) {
  if (y == Complex(0.0)) return {1.0, 0.0};
  if (x == Complex(0.0)) return {0.0, 1.0};
  const double ax = std::abs(x);
  const double r = std::hypot(ax, std::abs(y));
  return {ax / r, (x / ax) * std::conj(y) / r};
}

Complex wilkinson_shift(const CMatrix& h, Index iu) {
  const Complex a = h(iu - 1, iu - 1), b = h(iu - 1, iu), c = h(iu, iu - 1), d = h(iu, iu);
  const Complex half_diff = 0.5 * (a - d);
  const Complex disc = std::sqrt(half_diff * half_diff + b * c);
  const Complex mid = 0.5 * (a + d);
  const Complex e1 = mid + disc, e2 = mid - disc;
  return std::abs(e1 - d) <= std::abs(e2 - d) ? e1 : e2;
}

}  // namespace

CVector hessenberg_eigenvalues(CMatrix h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("hessenberg_eigenvalues: matrix must be square");
  if (!all_finite(h)) throw std::invalid_argument("hessenberg_eigenvalues: non-finite entries");
  const Index n = h.rows();
  CVector eig(n);
  if (n == 0) return eig;
  const double scale = std::max(h.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  const Index max_sweeps = 30 * n;
  Index sweeps = 0, stalled = 0;
  std::vector<Rotation> rot(n);
  Index iu = n - 1;
  while (iu >= 0) {
    Index il = iu;
    while (il > 0) {
      const double sub = std::abs(h(il, il - 1));
      double ref = std::abs(h(il - 1, il - 1)) + std::abs(h(il, il));
      if (ref == 0.0) ref = scale;
      if (sub <= kUnitRoundoff * ref) {
        h(il, il - 1) = 0.0;
        break;
      }
      --il;
    }
    if (il == iu) {
      eig[iu] = h(iu, iu);
      --iu;
      stalled = 0;
      continue;
    }
    if (++sweeps > max_sweeps) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "hessenberg_eigenvalues: no convergence after " << max_sweeps << " sweeps; converged:";
      for (Index k = iu + 1; k < n; ++k) msg << ' ' << eig[k];
      throw NumericalError(msg.str());
    }
    ++stalled;
    Complex sigma;
    if (stalled % 10 == 0) {
      const double bump = std::abs(h(iu, iu - 1).real()) + (iu >= 2 ? std::abs(h(iu - 1, iu - 2).real()) : 0.0);
      sigma = h(iu, iu) + Complex(0.75 * bump, 0.4375 * bump);
    } else {
      sigma = wilkinson_shift(h, iu);
    }

    for (Index k = il; k <= iu; ++k) h(k, k) -= sigma;
    for (Index k = il; k < iu; ++k) {
      const Rotation g = make_rotation(h(k, k), h(k + 1, k));
      rot[k] = g;
      for (Index j = k; j <= iu; ++j) {
        const Complex x = h(k, j), y = h(k + 1, j);
        h(k, j) = g.c * x + g.s * y;
        h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
      }
    }
    for (Index k = il; k < iu; ++k) {
      const Rotation g = rot[k];
      const Index last = std::min(k + 2, iu);
      for (Index i = il; i <= last; ++i) {
        const Complex x = h(i, k), y = h(i, k + 1);
        h(i, k) = x * g.c + y * std::conj(g.s);
        h(i, k + 1) = -x * g.s + y * g.c;
      }
    }
    for (Index k = il; k <= iu; ++k) h(k, k) += sigma;
  }
  return eig;
}

}  // namespace monointerp
