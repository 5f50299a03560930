/*
   Copyright 2026 The bellkit authors

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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bellkit/rational.hpp"

namespace bellkit {

/// Dense univariate polynomial over exact rationals.
///
/// Canonical form: no trailing zero coefficients are stored, and the zero
/// polynomial stores nothing. degree() is -1 for the zero polynomial.
/// Polynomials form a coefficient ring for PowerSeries, which is how the
/// transform machinery runs with symbolic (parameter-carrying) drivers.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& constant);
  /// coeffs[i] is the coefficient of x^i; trailing zeros are trimmed.
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial monomial(std::size_t degree,
                             const Rational& coeff = Rational(1));
  static Polynomial variable() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of x^i; zero beyond the degree.
  const Rational& coeff(std::size_t i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& x) const;  // Horner evaluation
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend Polynomial operator*(Polynomial lhs, const Rational& scalar) {
    lhs *= scalar;
    return lhs;
  }
  friend Polynomial operator*(const Rational& scalar, Polynomial rhs) {
    rhs *= scalar;
    return rhs;
  }
  Polynomial operator-() const;

  bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

  /// Exact division; throws std::domain_error when the remainder is nonzero
  /// or the divisor is zero.
  Polynomial divide_exact(const Polynomial& divisor) const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Human-readable rendering ("x^2 - x + 1/6"), used in diagnostics.
std::string to_string(const Polynomial& p);

template <>
struct RingTraits<Polynomial> {
  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(Rational(1)); }
  static Polynomial from_rational(const Rational& q) { return Polynomial(q); }
  static Polynomial div_int(const Polynomial& a, std::uint64_t n) {
    return a * Rational(1, static_cast<unsigned long>(n));
  }
};

static_assert(CoefficientRing<Polynomial>);

}  // namespace bellkit
