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

#include "bellkit/congruence.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bellkit {

namespace {

Polynomial one_minus_x_to(std::uint64_t d) {
  std::vector<Rational> coeffs(d + 1, Rational(0));
  coeffs[0] = 1;
  coeffs[d] = -1;
  return Polynomial(std::move(coeffs));
}

std::vector<Integer> integer_values(const CoefficientSequence<Rational>& a,
                                    std::size_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const Rational& value = a.at(n);
    if (!is_integral(value)) {
      throw std::domain_error("expected an integer coefficient at index " +
                              std::to_string(n));
    }
    out.push_back(value.get_num());
  }
  return out;
}

}  // namespace

bool is_p_integral(const Rational& q, std::uint64_t p) {
  Integer den = q.get_den();
  return mpz_divisible_ui_p(den.get_mpz_t(),
                            static_cast<unsigned long>(p)) == 0;
}

std::uint64_t residue_mod(const Rational& q, std::uint64_t p) {
  if (!is_p_integral(q, p)) {
    throw std::domain_error("value " + to_string(q) +
                            " is not p-integral for p = " + std::to_string(p));
  }
  Integer modulus(static_cast<unsigned long>(p));
  Integer num = q.get_num();
  Integer den = q.get_den();
  Integer num_mod;
  mpz_mod(num_mod.get_mpz_t(), num.get_mpz_t(), modulus.get_mpz_t());
  Integer den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) ==
      0) {
    throw std::domain_error("denominator of " + to_string(q) +
                            " is not invertible mod " + std::to_string(p));
  }
  Integer residue = (num_mod * den_inv) % modulus;
  return residue.get_ui();
}

bool check_exponent_hypothesis(const BellExponentSequence<Rational>& beta,
                               std::uint64_t p) {
  // A beta(m) with p in its denominator can never satisfy a mod-p
  // congruence, and at p | m it silently breaks the conclusion, so
  // p-integrality is demanded across the board.
  for (std::size_t m = 1; m <= beta.limit(); ++m) {
    const Rational& value = beta.at(m);
    if (!is_p_integral(value, p)) {
      return false;
    }
    if (m % p != 0 && residue_mod(value, p) != 0) {
      return false;
    }
  }
  return true;
}

bool check_vanishing_hypothesis(const BellExponentSequence<Rational>& beta,
                                std::uint64_t p) {
  for (std::size_t m = 1; m <= beta.limit(); ++m) {
    if (m % p != 0 && beta.at(m) != 0) {
      return false;
    }
  }
  return true;
}

CongruenceReport verify_congruence(const Driver<Rational>& g, std::uint64_t p,
                                   std::size_t limit) {
  if (!is_prime(p)) {
    throw std::domain_error("modulus " + std::to_string(p) + " is not prime");
  }
  CongruenceReport report;
  report.theorem = "congruence";
  report.p = p;
  report.limit = limit;
  BellExponentSequence<Rational> beta = bell_exponents<Rational>(g, limit);
  report.hypothesis_ok = check_exponent_hypothesis(beta, p);
  if (!report.hypothesis_ok) {
    // The theorem claims nothing here; leave the verdict false and the
    // violation list empty rather than scanning an inapplicable claim.
    return report;
  }
  CoefficientSequence<Rational> a = coeffs_via_recurrence<Rational>(g, limit);
  for (std::size_t n = 1; n <= limit; ++n) {
    if (n % p == 0) {
      continue;
    }
    std::uint64_t residue = residue_mod(a.at(n), p);
    if (residue != 0) {
      report.violations.push_back({n, std::to_string(residue)});
    }
  }
  report.verdict = report.violations.empty();
  return report;
}

CongruenceReport verify_vanishing(const Driver<Rational>& g, std::uint64_t p,
                                  std::size_t limit) {
  if (!is_prime(p)) {
    throw std::domain_error("modulus " + std::to_string(p) + " is not prime");
  }
  CongruenceReport report;
  report.theorem = "vanishing";
  report.p = p;
  report.limit = limit;
  BellExponentSequence<Rational> beta = bell_exponents<Rational>(g, limit);
  report.hypothesis_ok = check_vanishing_hypothesis(beta, p);
  // Unlike the congruence check the conclusion is still scanned when the
  // hypothesis fails; a counterexample there is informative output.
  CoefficientSequence<Rational> a = coeffs_via_recurrence<Rational>(g, limit);
  for (std::size_t n = 1; n <= limit; ++n) {
    if (n % p == 0) {
      continue;
    }
    if (!(a.at(n) == 0)) {
      report.violations.push_back({n, to_string(a.at(n))});
    }
  }
  report.verdict = report.violations.empty();
  return report;
}

std::string to_json(const CongruenceReport& report) {
  nlohmann::ordered_json j;
  j["theorem"] = report.theorem;
  j["p"] = report.p;
  j["limit"] = report.limit;
  j["hypothesis_ok"] = report.hypothesis_ok;
  j["verdict"] = report.verdict;
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const CongruenceViolation& violation : report.violations) {
    nlohmann::ordered_json entry;
    entry["n"] = violation.index;
    entry["residue"] = violation.residue;
    violations.push_back(std::move(entry));
  }
  j["violations"] = std::move(violations);
  return j.dump();
}

CoefficientSequence<Rational> tau_series(std::size_t order) {
  std::vector<Rational> beta(order, Rational(24));
  PowerSeries<Rational> series = euler_product<Rational>(beta, order);
  return CoefficientSequence<Rational>(series.coeffs());
}

std::vector<Integer> tau(std::size_t count) {
  if (count == 0) {
    return {};
  }
  return integer_values(tau_series(count - 1), count);
}

CoefficientSequence<Rational> colored_partition_series(std::uint64_t k,
                                                       std::size_t order) {
  Rational exponent(Integer(static_cast<unsigned long>(k)));
  std::vector<Rational> beta(order, -exponent);
  PowerSeries<Rational> series = euler_product<Rational>(beta, order);
  return CoefficientSequence<Rational>(series.coeffs());
}

std::vector<Integer> colored_partitions(std::uint64_t k, std::size_t count) {
  return integer_values(colored_partition_series(k, count), count + 1);
}

Polynomial cyclotomic(std::uint64_t q) {
  if (q == 0) {
    throw std::domain_error("cyclotomic polynomials are indexed by q >= 1");
  }
  Polynomial numerator(Rational(1));
  std::vector<std::uint64_t> denominator_degrees;
  for (std::uint64_t d : divisors(q)) {
    switch (mobius(q / d)) {
      case 1:
        numerator *= one_minus_x_to(d);
        break;
      case -1:
        denominator_degrees.push_back(d);
        break;
      default:
        break;
    }
  }
  Polynomial result = std::move(numerator);
  for (std::uint64_t d : denominator_degrees) {
    result = result.divide_exact(one_minus_x_to(d));
  }
  return result;
}

CoefficientSequence<Rational> to_coefficient_sequence(const Polynomial& poly,
                                                      std::size_t order) {
  if (!(poly.coeff(0) == 1)) {
    throw std::invalid_argument("polynomial must have constant term 1");
  }
  std::vector<Rational> values;
  values.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    values.push_back(poly.coeff(n));
  }
  return CoefficientSequence<Rational>(std::move(values));
}

}  // namespace bellkit
