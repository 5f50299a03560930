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

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

namespace bellkit {

// Exact arithmetic is delegated to GMP. All rationals are kept canonical
// (lowest terms, positive denominator); every helper below preserves that.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or a plain integer string (base 10). The result is
/// canonicalized. Throws std::invalid_argument on malformed input or a zero
/// denominator.
Rational parse_rational(const std::string& text);

/// Renders canonically: integers without a denominator, otherwise "p/q"
/// in lowest terms with the sign on the numerator. No spaces.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// True when the denominator is 1.
bool is_integral(const Rational& value);

Integer factorial(std::uint64_t n);
Integer binomial(std::uint64_t n, std::uint64_t k);

/// base^exponent as an exact integer.
Integer pow_integer(std::uint64_t base, std::uint64_t exponent);

/// Coefficient-ring customization point for the series and transform
/// templates. A ring must provide the four static hooks below next to the
/// usual +, -, *, unary - and == operators. div_int is division by a
/// positive integer and must be exact in exact rings.
template <typename R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_rational(const Rational& q) { return q; }
  static Rational div_int(const Rational& a, std::uint64_t n) {
    return Rational(a / Rational(n, 1u));
  }
};

// Double precision backs the float-only driver paths. Same interface,
// approximate arithmetic; consumers pick their own tolerances.
template <>
struct RingTraits<double> {
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_rational(const Rational& q) { return q.get_d(); }
  static double div_int(double a, std::uint64_t n) {
    return a / static_cast<double>(n);
  }
};

template <typename R>
concept CoefficientRing = requires(const R& a, const R& b, const Rational& q,
                                   std::uint64_t n) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a* b } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { RingTraits<R>::zero() } -> std::convertible_to<R>;
  { RingTraits<R>::one() } -> std::convertible_to<R>;
  { RingTraits<R>::from_rational(q) } -> std::convertible_to<R>;
  { RingTraits<R>::div_int(a, n) } -> std::convertible_to<R>;
};

static_assert(CoefficientRing<Rational>);
static_assert(CoefficientRing<double>);

}  // namespace bellkit
