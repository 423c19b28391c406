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

#ifndef MONOINTERP_TYPES_HPP
#define MONOINTERP_TYPES_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace monointerp {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;

/// A pure map from the complex plane to itself. Must be safe to call concurrently.
using ComplexFunction = std::function<Complex(Complex)>;

/// Unit roundoff of IEEE binary64, 2^-53.
inline constexpr double kUnitRoundoff = 0x1p-53;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

template <typename Derived>
bool all_finite(const Eigen::DenseBase<Derived>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_finite(v.derived().coeff(i))) return false;
  return true;
}

/// Base of every numerical failure raised by the library (as opposed to
/// std::invalid_argument, which signals a violated precondition).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrixError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace monointerp

#endif  // MONOINTERP_TYPES_HPP
