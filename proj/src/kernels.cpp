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

#include "monointerp/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "monointerp/quadrature.hpp"

namespace monointerp {

// ---------------------------------------------------------------------------
// Rootfinding

CMatrix companion_matrix(const MonomialPoly& p, double trim_tol) {
  if (!(trim_tol >= 0.0)) throw std::invalid_argument("companion_matrix: trim_tol must be >= 0");
  const MonomialPoly q = p.trimmed(trim_tol);
  const Index n = q.degree();
  if (n < 1 || q[n] == Complex(0.0)) throw std::invalid_argument("companion_matrix: degree 0 after trimming");
  CMatrix c = CMatrix::Zero(n, n);
  for (Index i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (Index k = 0; k < n; ++k) c(k, n - 1) = -q[k] / q[n];
  return c;
}

RootSet roots(const MonomialPoly& p, double trim_tol) {
  const CVector eig = hessenberg_eigenvalues(balance(companion_matrix(p, trim_tol)));
  RootSet out;
  out.all_roots.assign(eig.data(), eig.data() + eig.size());
  return out;
}

namespace {

struct Candidate {
  Complex z;
  double t;
  double residual;
  std::size_t panel;
};

// Nearest point of the local curve s -> frame^-1(g(t(s))) to zeta: a coarse
// scan followed by golden-section refinement. Returns (s, distance).
std::pair<double, double> nearest_on_local_curve(const PanelInterpolant& p, Complex zeta) {
  auto dist = [&](double s) { return std::abs(p.frame.to_local(p.piece.point(s)) - zeta); };
  constexpr int scan = 256;
  int best = 0;
  double best_d = dist(-1.0);
  for (int i = 1; i <= scan; ++i) {
    const double d = dist(-1.0 + 2.0 * i / scan);
    if (d < best_d) best_d = d, best = i;
  }
  double lo = -1.0 + 2.0 * std::max(best - 1, 0) / scan, hi = -1.0 + 2.0 * std::min(best + 1, scan) / scan;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo), f1 = dist(x1), f2 = dist(x2);
  for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      hi = x2, x2 = x1, f2 = f1, x1 = hi - g * (hi - lo), f1 = dist(x1);
    } else {
      lo = x1, x1 = x2, f1 = f2, x2 = lo + g * (hi - lo), f2 = dist(x2);
    }
  }
  const double s = f1 < f2 ? x1 : x2;
  const double d = std::min(f1, f2);
  return d < best_d ? std::make_pair(s, d) : std::make_pair(-1.0 + 2.0 * best / scan, best_d);
}

}  // namespace

RootSet roots_on_arc(const PiecewiseModel& model, const ComplexFunction& f, double band) {
  if (!(band >= 0.0)) throw std::invalid_argument("roots_on_arc: band must be >= 0");
  RootSet out;
  std::vector<Candidate> found;
  for (std::size_t i = 0; i < model.panels.size(); ++i) {
    const PanelInterpolant& p = model.panels[i];
    const MonomialPoly q = p.poly.trimmed(kUnitRoundoff);
    if (q.degree() < 1) continue;
    const CVector local = hessenberg_eigenvalues(balance(companion_matrix(q)));
    for (Index k = 0; k < local.size(); ++k) {
      const Complex s = local[k];
      out.all_roots.push_back(p.frame.to_global(s));
      Complex z;
      double t;
      if (model.arc.is_interval()) {
        if (std::abs(s.imag()) > band || s.real() < -1.0 - band || s.real() > 1.0 + band) continue;
        const double sr = std::clamp(s.real(), -1.0, 1.0);
        t = p.piece.param_at(sr);
        z = model.arc.point(t);
      } else {
        const auto [s_near, d] = nearest_on_local_curve(p, s);
        if (d > band) continue;
        t = p.piece.param_at(s_near);
        z = p.frame.to_global(s);
      }
      found.push_back({z, t, std::abs(f(z)), i});
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) { return a.t < b.t; });
  std::vector<Candidate> kept;
  for (const Candidate& c : found) {
    if (!kept.empty()) {
      Candidate& prev = kept.back();
      const double scale =
          std::max(std::abs(model.panels[prev.panel].frame.scale), std::abs(model.panels[c.panel].frame.scale));
      if (prev.panel != c.panel && std::abs(prev.z - c.z) <= 1e-8 * scale) {
        if (c.residual < prev.residual) prev = c;
        continue;
      }
    }
    kept.push_back(c);
  }
  for (const Candidate& c : kept) {
    out.on_arc.push_back(c.z);
    out.params.push_back(c.t);
    out.residuals.push_back(c.residual);
  }
  return out;
}

RootSet roots_on_arc(const ComplexFunction& f, const Arc& arc, Index order, double epsilon, double band,
                     int max_depth) {
  return roots_on_arc(adaptive_fit(f, arc, order, epsilon, max_depth), f, band);
}

// ---------------------------------------------------------------------------
// Moments

const char* to_string(MomentKind kind) {
  switch (kind) {
    case MomentKind::fourier: return "fourier";
    case MomentKind::cauchy: return "cauchy";
    case MomentKind::log: return "log";
  }
  return "unknown";
}

const char* to_string(MomentMethod method) {
  switch (method) {
    case MomentMethod::recurrence: return "recurrence";
    case MomentMethod::closed_form: return "closed-form";
    case MomentMethod::oracle_fallback: return "oracle-fallback";
  }
  return "unknown";
}

namespace {

Complex ipow(Complex z, Index k) {
  Complex r = 1.0;
  for (Index i = 0; i < k; ++i) r *= z;
  return r;
}

Complex log1p_complex(Complex w) {
  const double re = 0.5 * std::log1p(2.0 * w.real() + std::norm(w));
  return {re, std::atan2(w.imag(), 1.0 + w.real())};
}

void check_off_chord(Complex z_a, Complex z_b, Complex xi) {
  const Complex d = z_b - z_a;
  if (d == Complex(0.0)) throw std::invalid_argument("moments: degenerate chord");
  const double s = std::clamp(((xi - z_a) / d).real(), 0.0, 1.0);
  const double dist = std::abs(z_a + s * d - xi);
  if (!(dist > 1e-13 * std::abs(d))) throw SingularKernelError("moments: singularity on the integration chord");
}

}  // namespace

MomentTable fourier_moments(double z_a, double z_b, double c, Index n) {
  if (!(z_a < z_b)) throw std::invalid_argument("fourier_moments: need z_a < z_b");
  if (n < 0) throw std::invalid_argument("fourier_moments: N must be >= 0");
  if (!is_finite(c)) throw std::invalid_argument("fourier_moments: non-finite frequency");
  MomentTable t;
  t.kind = MomentKind::fourier;
  t.c = c;
  t.z_a = z_a;
  t.z_b = z_b;
  t.values.resize(n + 1);
  t.methods.assign(n + 1, MomentMethod::recurrence);
  if (c == 0.0) {
    for (Index k = 0; k <= n; ++k) {
      t.values[k] = (std::pow(z_b, double(k + 1)) - std::pow(z_a, double(k + 1))) / double(k + 1);
      t.methods[k] = MomentMethod::closed_form;
    }
    return t;
  }
  const Complex ic(0.0, c);
  const Complex ea = std::exp(Complex(0.0, c * z_a)), eb = std::exp(Complex(0.0, c * z_b));
  const double switch_at = std::abs(c) <= 1e-8 ? 0.0 : std::abs(c) * (z_b - z_a);
  double pa = 1.0, pb = 1.0;
  for (Index k = 0; k <= n; ++k) {
    if (double(k) < switch_at) {
      const Complex boundary = (pb * eb - pa * ea) / ic;
      t.values[k] = (k == 0) ? boundary : boundary - (double(k) / ic) * t.values[k - 1];
    } else {
      t.values[k] = adaptive_gauss_legendre(
          [k, c](double x) { return std::pow(x, double(k)) * std::exp(Complex(0.0, c * x)); }, z_a, z_b);
      t.methods[k] = MomentMethod::oracle_fallback;
    }
    pa *= z_a;
    pb *= z_b;
  }
  return t;
}

MomentTable cauchy_moments(Complex z_a, Complex z_b, Complex xi, Index n) {
  if (n < 0) throw std::invalid_argument("cauchy_moments: N must be >= 0");
  if (!is_finite(xi) || !is_finite(z_a) || !is_finite(z_b)) throw std::invalid_argument("cauchy_moments: non-finite input");
  check_off_chord(z_a, z_b, xi);
  MomentTable t;
  t.kind = MomentKind::cauchy;
  t.xi = xi;
  t.z_a = z_a;
  t.z_b = z_b;
  t.values.resize(n + 1);
  t.methods.assign(n + 1, MomentMethod::recurrence);

  const Complex w = (z_b - z_a) / (z_a - xi);
  t.values[0] = std::abs(w) < 0.5 ? log1p_complex(w) : std::log((z_b - xi) / (z_a - xi));
  t.methods[0] = MomentMethod::closed_form;
  if (n == 0) return t;

  // (z_b^k - z_a^k) / k
  std::vector<Complex> inc(n + 1);
  Complex pa = 1.0, pb = 1.0;
  for (Index k = 1; k <= n; ++k) {
    pa *= z_a;
    pb *= z_b;
    inc[k] = (pb - pa) / double(k);
  }
  if (std::abs(xi) <= 1.0) {
    for (Index k = 1; k <= n; ++k) t.values[k] = xi * t.values[k - 1] + inc[k];
  } else {
    t.values[n] = chord_integral([n, xi](Complex z) { return ipow(z, n) / (z - xi); }, z_a, z_b);
    t.methods[n] = MomentMethod::oracle_fallback;
    for (Index k = n; k >= 2; --k) t.values[k - 1] = (t.values[k] - inc[k]) / xi;
  }
  return t;
}

MomentTable log_moments(Complex z_a, Complex z_b, Complex xi, Index n) {
  if (n < 0) throw std::invalid_argument("log_moments: N must be >= 0");
  const MomentTable q = cauchy_moments(z_a, z_b, xi, n + 1);
  MomentTable t;
  t.kind = MomentKind::log;
  t.xi = xi;
  t.z_a = z_a;
  t.z_b = z_b;
  t.values.resize(n + 1);
  t.methods.resize(n + 1);
  const Complex la = std::log(z_a - xi);
  const Complex lb = la + q.values[0];
  Complex pa = z_a, pb = z_b;
  for (Index k = 0; k <= n; ++k) {
    const double kk = double(k + 1);
    t.values[k] = (pb * lb - pa * la) / kk - q.values[k + 1] / kk;
    t.methods[k] = q.methods[k + 1];
    pa *= z_a;
    pb *= z_b;
  }
  return t;
}

MomentTable panel_moment_table(const PanelInterpolant& pi, MomentKind kind, Complex parameter) {
  const Index n = pi.poly.degree();
  switch (kind) {
    case MomentKind::fourier: {
      const Complex m = pi.frame.scale;
      if (m.imag() != 0.0 || m.real() <= 0.0 || pi.frame.shift.imag() != 0.0)
        throw std::invalid_argument("panel_moment_table: Fourier moments need a real panel frame");
      if (parameter.imag() != 0.0) throw std::invalid_argument("panel_moment_table: frequency must be real");
      return fourier_moments(-1.0, 1.0, parameter.real() * m.real(), n);
    }
    case MomentKind::cauchy: return cauchy_moments(-1.0, 1.0, pi.frame.to_local(parameter), n);
    case MomentKind::log: return log_moments(-1.0, 1.0, pi.frame.to_local(parameter), n);
  }
  throw std::invalid_argument("panel_moment_table: unknown kernel");
}

Complex integrate_against(const PanelInterpolant& pi, const MomentTable& table) {
  if (table.z_a != Complex(-1.0) || table.z_b != Complex(1.0))
    throw std::invalid_argument("integrate_against: table is not in the panel's local frame (endpoints must be -1, 1)");
  const Index n = pi.poly.size();
  if (table.values.size() < n) throw std::invalid_argument("integrate_against: table shorter than the panel order");
  Complex sum = 0.0;
  for (Index k = 0; k < n; ++k) sum += pi.poly[k] * table.values[k];
  const Complex m = pi.frame.scale;
  switch (table.kind) {
    case MomentKind::fourier: {
      const double frequency = table.c / m.real();
      return m * std::exp(Complex(0.0, frequency) * pi.frame.shift) * sum;
    }
    case MomentKind::cauchy: return sum;
    case MomentKind::log: {
      Complex plain = 0.0;  // sum_k a_k int_{-1}^{1} s^k ds
      for (Index k = 0; k < n; k += 2) plain += pi.poly[k] * (2.0 / double(k + 1));
      return m * (sum + std::log(m) * plain);
    }
  }
  throw std::invalid_argument("integrate_against: unknown kernel");
}

}  // namespace monointerp
