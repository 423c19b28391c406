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

#ifndef MONOINTERP_QUADRATURE_HPP
#define MONOINTERP_QUADRATURE_HPP

#include "monointerp/types.hpp"

namespace monointerp {

/// Adaptive Gauss-Legendre quadrature of a complex-valued f over [a, b]. Each
/// subinterval is accepted when a 20-point rule and the sum over its two
/// halves agree to tol relative to the running integral of |f|.
Complex adaptive_gauss_legendre(const std::function<Complex(double)>& f, double a, double b, double tol = 1e-15,
                                int max_depth = 60);

/// Integral of f along the straight segment from z_a to z_b.
Complex chord_integral(const ComplexFunction& f, Complex z_a, Complex z_b, double tol = 1e-15);

}  // namespace monointerp

#endif  // MONOINTERP_QUADRATURE_HPP
