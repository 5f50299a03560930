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

#include "bellkit/rational.hpp"

#include <stdexcept>

namespace bellkit {

Rational parse_rational(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  Rational value;
  // mpq_class::set_str does not canonicalize and accepts a zero denominator;
  // both are handled here so callers always see a canonical value.
  if (value.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal '" +
                                text + "'");
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const Integer& value) { return value.get_str(10); }

bool is_integral(const Rational& value) { return value.get_den() == 1; }

Integer factorial(std::uint64_t n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return Integer(0);
  }
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

Integer pow_integer(std::uint64_t base, std::uint64_t exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exponent));
  return result;
}

}  // namespace bellkit
