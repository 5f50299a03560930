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
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bellkit/rational.hpp"

namespace bellkit {

// All arithmetic functions are defined on n >= 1; n = 0 is a domain error.
// Factorization uses a smallest-prime-factor sieve below a configurable
// bound (default 10^6, overridable via BELLKIT_SIEVE_BOUND) and trial
// division above it. The sieve is built once and read-only afterwards.

/// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// Divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Moebius function: (-1)^k on squarefree n with k prime factors, else 0.
int mobius(std::uint64_t n);

/// Dirichlet convolution (f * g)(n) = sum over d | n of f(d) g(n/d).
Rational dirichlet_convolve(const std::function<Rational(std::uint64_t)>& f,
                            const std::function<Rational(std::uint64_t)>& g,
                            std::uint64_t n);

Rational euler_phi(std::uint64_t n);

/// Jordan totient J_k(n) = n^k * prod over p | n of (1 - p^-k); J_1 = phi.
Rational jordan_totient(std::uint64_t k, std::uint64_t n);

/// sigma_k(n) = sum over d | n of d^k.
Rational sigma(std::uint64_t k, std::uint64_t n);

/// Ramanujan sum c_q(n) = sum over d | gcd(q, n) of d * mu(q/d).
Rational ramanujan_sum(std::uint64_t q, std::uint64_t n);

/// Nontrivial character mod 4: 1, 0, -1, 0 for n = 1, 2, 3, 0 (mod 4).
int chi4(std::uint64_t n);

/// Representations of n as a sum of four squares (signed, ordered);
/// r4(n) = 8 sigma(n) - 32 sigma(n/4), the sigma(n/4) term only when 4 | n.
Rational r4(std::uint64_t n);

/// von Mangoldt Lambda(n): log p on prime powers p^k, else 0. Float only.
double von_mangoldt(std::uint64_t n);

/// A named arithmetic function n -> exact rational, n >= 1. Immutable after
/// construction; evaluation never mutates shared state.
class ArithmeticFunction {
 public:
  using Evaluator = std::function<Rational(std::uint64_t)>;

  ArithmeticFunction(std::string name, Evaluator eval)
      : ArithmeticFunction(std::move(name), {}, std::move(eval)) {}
  ArithmeticFunction(std::string name, std::vector<Rational> params,
                     Evaluator eval);

  const std::string& name() const { return name_; }
  const std::vector<Rational>& params() const { return params_; }

  /// Throws std::domain_error on n = 0.
  Rational operator()(std::uint64_t n) const;

  /// The evaluator as a plain callable for the transform templates.
  Evaluator driver() const;

 private:
  std::string name_;
  std::vector<Rational> params_;
  std::shared_ptr<const Evaluator> eval_;
};

/// Built-in driver registry. Exact drivers only:
///   epsilon                g(1) = 1, g(n) = 0 otherwise
///   power_k  (param k)     g(n) = n^k, integer k >= 0
///   chi4                   g(n) = chi4(n)
///   phi                    g(n) = euler_phi(n)
///   ramanujan_q (param q)  g(n) = c_q(n), integer q >= 1
///   r4                     g(n) = r4(n)
///   constant_c (param c)   g(n) = c
/// "log_float" names the float-only driver (see log_float_driver) and
/// "custom_file" requires a path (see load_driver_file); requesting either
/// here throws std::invalid_argument, as do unknown names and wrong arity.
ArithmeticFunction builtin_driver(const std::string& name,
                                  const std::vector<Rational>& params = {});

/// The float-only driver g(n) = log n.
std::function<double(std::uint64_t)> log_float_driver();

/// Loads a driver from JSON: {"name": "<id>", "values": ["p/q", ...]} where
/// values[i] = g(i + 1). Evaluation past the list is a domain error, not
/// zero extension. I/O and parse problems throw std::runtime_error.
ArithmeticFunction load_driver_file(const std::string& path);

}  // namespace bellkit
