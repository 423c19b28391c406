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

#ifndef MONOINTERP_POLYCORE_HPP
#define MONOINTERP_POLYCORE_HPP

// Polynomials stored by their monomial coefficients a_0..a_N (ascending powers).
// Degree is structural: trailing zeros are never dropped unless trimmed() is
// called explicitly.

#include <algorithm>
#include <initializer_list>
#include <type_traits>
#include <vector>

#include "monointerp/types.hpp"

namespace monointerp {

template <typename Scalar>
class MonomialPolynomial {
 public:
  using Coefficients = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using RealScalar = typename Eigen::NumTraits<Scalar>::Real;

  explicit MonomialPolynomial(Coefficients coeffs) : coeffs_(std::move(coeffs)) { validate(); }

  MonomialPolynomial(std::initializer_list<Scalar> coeffs) : coeffs_(Index(coeffs.size())) {
    std::copy(coeffs.begin(), coeffs.end(), coeffs_.data());
    validate();
  }

  static MonomialPolynomial zero(Index degree) { return MonomialPolynomial(Coefficients::Zero(degree + 1)); }

  Index degree() const { return coeffs_.size() - 1; }
  Index size() const { return coeffs_.size(); }
  const Coefficients& coeffs() const { return coeffs_; }
  const Scalar& operator[](Index k) const { return coeffs_[k]; }

  // Drops leading coefficients with |a_k| <= tol * ||a||_2, always keeping a_0.
  MonomialPolynomial trimmed(RealScalar tol) const {
    const RealScalar cut = tol * coeffs_.norm();
    Index n = coeffs_.size();
    while (n > 1 && std::abs(coeffs_[n - 1]) <= cut) --n;
    return MonomialPolynomial(Coefficients(coeffs_.head(n)));
  }

  friend bool operator==(const MonomialPolynomial& a, const MonomialPolynomial& b) {
    return a.coeffs_.size() == b.coeffs_.size() && a.coeffs_ == b.coeffs_;
  }

 private:
  void validate() const {
    if (coeffs_.size() < 1) throw std::invalid_argument("MonomialPolynomial: needs at least one coefficient");
    if (!all_finite(coeffs_)) throw std::invalid_argument("MonomialPolynomial: non-finite coefficient");
  }

  Coefficients coeffs_;
};

using MonomialPoly = MonomialPolynomial<Complex>;
using RealMonomialPoly = MonomialPolynomial<double>;

namespace detail {

template <typename Arg>
void require_finite_argument(const Arg& z) {
  if (!is_finite(z)) throw std::domain_error("polynomial evaluation at a non-finite point");
}

}  // namespace detail

// Nested multiplication; N multiplications and N additions.
template <typename Scalar, typename Arg>
auto eval_horner(const MonomialPolynomial<Scalar>& p, const Arg& z) {
  using Result = decltype(Scalar() * Arg());
  detail::require_finite_argument(z);
  const auto& a = p.coeffs();
  Result acc = a[a.size() - 1];
  for (Index k = a.size() - 2; k >= 0; --k) acc = acc * z + a[k];
  return acc;
}

// Estrin's scheme: pairs of coefficients are combined with z, then pairs of
// pairs with z^2, and so on. Each level is independent work.
template <typename Scalar, typename Arg>
auto eval_estrin(const MonomialPolynomial<Scalar>& p, const Arg& z) {
  using Result = decltype(Scalar() * Arg());
  detail::require_finite_argument(z);
  const auto& a = p.coeffs();
  std::vector<Result> level(a.data(), a.data() + a.size());
  Result power = z;
  while (level.size() > 1) {
    const std::size_t half = (level.size() + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
      const std::size_t lo = 2 * i;
      level[i] = lo + 1 < level.size() ? level[lo] + level[lo + 1] * power : level[lo];
    }
    level.resize(half);
    power = power * power;
  }
  return level.front();
}

template <typename Scalar>
MonomialPolynomial<Scalar> derivative(const MonomialPolynomial<Scalar>& p) {
  using Coeffs = typename MonomialPolynomial<Scalar>::Coefficients;
  if (p.degree() == 0) return MonomialPolynomial<Scalar>::zero(0);
  Coeffs d(p.degree());
  for (Index k = 1; k <= p.degree(); ++k) d[k - 1] = p[k] * static_cast<double>(k);
  return MonomialPolynomial<Scalar>(std::move(d));
}

template <typename Scalar>
MonomialPolynomial<Scalar> antiderivative(const MonomialPolynomial<Scalar>& p, const Scalar& c0) {
  using Coeffs = typename MonomialPolynomial<Scalar>::Coefficients;
  Coeffs a(p.size() + 1);
  a[0] = c0;
  for (Index k = 0; k < p.size(); ++k) a[k + 1] = p[k] / static_cast<double>(k + 1);
  return MonomialPolynomial<Scalar>(std::move(a));
}

/// Euclidean norm of the coefficient vector. By Parseval this is the RMS of
/// |p| on the unit circle.
template <typename Scalar>
double coeff_norm2(const MonomialPolynomial<Scalar>& p) {
  return p.coeffs().norm();
}

/// Max of |p(e^{i theta})| over a uniform grid of `samples` angles. This is a
/// lower estimate of the sup norm on the unit circle; it converges as the grid
/// is refined. Requires samples >= 8 (N + 1).
template <typename Scalar>
double circle_sup_norm(const MonomialPolynomial<Scalar>& p, Index samples) {
  if (samples < 8 * p.size())
    throw std::invalid_argument("circle_sup_norm: need at least 8 (N + 1) samples");
  double best = 0.0;
  for (Index j = 0; j < samples; ++j) {
    const double theta = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(samples);
    best = std::max(best, std::abs(eval_horner(p, std::polar(1.0, theta))));
  }
  return best;
}

}  // namespace monointerp

#endif  // MONOINTERP_POLYCORE_HPP
