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

#include <cstdint>
#include <string>
#include <vector>

#include "bellkit/bell.hpp"
#include "bellkit/polynomial.hpp"
#include "bellkit/rational.hpp"

namespace bellkit {

/// One index where the claimed divisibility fails, with the offending
/// residue (or exact value, for vanishing checks) rendered as a string.
struct CongruenceViolation {
  std::uint64_t index = 0;
  std::string residue;
};

/// Result of checking one of the two divisibility theorems on a driver.
///
/// For the congruence theorem the hypothesis is
///   beta(m) = 0 mod p for every m <= limit with p not dividing m,
/// and the conclusion checked is a(n) = 0 mod p for p not dividing n.
/// For the vanishing theorem replace "= 0 mod p" by exact vanishing in
/// the hypothesis; the conclusion is a(n) = 0 exactly.
struct CongruenceReport {
  std::string theorem;  // "congruence" or "vanishing"
  std::uint64_t p = 0;
  std::uint64_t limit = 0;
  bool hypothesis_ok = false;
  bool verdict = false;
  std::vector<CongruenceViolation> violations;
};

/// True when q has no p in its denominator, i.e. q is a p-adic integer.
bool is_p_integral(const Rational& q, std::uint64_t p);

/// q mod p in [0, p) for p-integral q (inverts the denominator mod p).
/// Throws std::domain_error otherwise.
std::uint64_t residue_mod(const Rational& q, std::uint64_t p);

/// Checks beta(m) = 0 mod p for all m <= beta.limit() with p not
/// dividing m. Any beta(m) with p in its denominator, at any index,
/// fails the check: the conclusion needs every exponent p-integral.
bool check_exponent_hypothesis(const BellExponentSequence<Rational>& beta,
                               std::uint64_t p);

/// Checks beta(m) = 0 exactly for all m <= beta.limit() with p not
/// dividing m.
bool check_vanishing_hypothesis(const BellExponentSequence<Rational>& beta,
                                std::uint64_t p);

/// Verifies the congruence theorem on g up to the given limit. Throws
/// std::domain_error if p is not prime or a value that must be reduced
/// mod p fails to be p-integral.
CongruenceReport verify_congruence(const Driver<Rational>& g, std::uint64_t p,
                                   std::size_t limit);

/// Verifies the vanishing theorem on g up to the given limit. The
/// hypothesis result is reported but does not short-circuit the scan,
/// so a driver that fails the hypothesis can still earn a meaningful
/// false verdict. Throws std::domain_error if p is not prime.
CongruenceReport verify_vanishing(const Driver<Rational>& g, std::uint64_t p,
                                  std::size_t limit);

/// Serializes a report as a single-line JSON object. Violations keep
/// scan order. Field layout is part of the CLI contract.
std::string to_json(const CongruenceReport& report);

/// Coefficients a(0..order) of prod (1-x^m)^24, so a(n) is the Ramanujan
/// tau value tau(n+1).
CoefficientSequence<Rational> tau_series(std::size_t order);

/// tau(1..count) as integers.
std::vector<Integer> tau(std::size_t count);

/// Coefficients of prod (1-x^m)^{-k}: k-colored partition numbers.
CoefficientSequence<Rational> colored_partition_series(std::uint64_t k,
                                                       std::size_t order);

/// p_k(0..count) as integers.
std::vector<Integer> colored_partitions(std::uint64_t k, std::size_t count);

/// The cyclotomic polynomial Phi_q, computed from
/// prod_{d|q} (1 - x^d)^{mu(q/d)} by exact division. For q > 1 the
/// mu-weights sum to zero, the sign flips cancel, and this equals the
/// classical Phi_q; for q = 1 it is 1 - x rather than x - 1, which is
/// the form the product side of the transform produces. Requires q >= 1.
Polynomial cyclotomic(std::uint64_t q);

/// Reads the polynomial as a coefficient sequence padded (or truncated)
/// to the given order; requires constant term 1.
CoefficientSequence<Rational> to_coefficient_sequence(const Polynomial& poly,
                                                      std::size_t order);

}  // namespace bellkit
