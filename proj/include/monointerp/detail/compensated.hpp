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

#ifndef MONOINTERP_DETAIL_COMPENSATED_HPP
#define MONOINTERP_DETAIL_COMPENSATED_HPP

// Error-free transformations (Knuth TwoSum, FMA-based TwoProduct) and a
// compensated dot-product accumulator in the style of Ogita, Rump and Oishi's
// Dot2. Results are as accurate as if computed in twice the working precision
// and then rounded. Translation units using this must not contract a*b+c.

#include <cmath>
#include <complex>
#include <utility>

namespace monointerp::detail {

inline std::pair<double, double> two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline std::pair<double, double> two_product(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

class CompensatedSum {
 public:
  void add(double x) {
    auto [s, e] = two_sum(sum_, x);
    sum_ = s;
    err_ += e;
  }
  void add_product(double a, double b) {
    auto [p, e] = two_product(a, b);
    add(p);
    err_ += e;
  }
  double value() const { return sum_ + err_; }

 private:
  double sum_ = 0.0;
  double err_ = 0.0;
};

class ComplexCompensatedSum {
 public:
  void add(const std::complex<double>& z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  void add_product(const std::complex<double>& a, const std::complex<double>& b) {
    re_.add_product(a.real(), b.real());
    re_.add_product(-a.imag(), b.imag());
    im_.add_product(a.real(), b.imag());
    im_.add_product(a.imag(), b.real());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace monointerp::detail

#endif  // MONOINTERP_DETAIL_COMPENSATED_HPP
