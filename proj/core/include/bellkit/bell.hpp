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
#include <span>
#include <stdexcept>
#include <vector>

#include "bellkit/arithfn.hpp"
#include "bellkit/power_series.hpp"
#include "bellkit/rational.hpp"

namespace bellkit {

// The transform pairs a driver g with the series
//   F_g(x) = exp(-sum_{n>=1} g(n)/n x^n) = prod_{m>=1} (1-x^m)^{beta_g(m)},
// where m beta_g(m) = (mu * g)(m). Everything below follows from that single
// identity; the three coefficient paths are kept deliberately independent so
// they can cross-check each other.

/// A driver generalized over the coefficient ring (exact drivers use
/// Rational, the log driver double, symbolic families Polynomial).
template <CoefficientRing R>
using Driver = std::function<R(std::uint64_t)>;

/// Exponents beta(1..limit), 1-based access.
template <CoefficientRing R = Rational>
class BellExponentSequence {
 public:
  explicit BellExponentSequence(std::vector<R> values)
      : values_(std::move(values)) {}

  std::size_t limit() const noexcept { return values_.size(); }

  /// beta(m), 1 <= m <= limit().
  const R& at(std::size_t m) const {
    if (m == 0 || m > values_.size()) {
      throw std::out_of_range("exponent index out of range");
    }
    return values_[m - 1];
  }

  const std::vector<R>& values() const noexcept { return values_; }

 private:
  std::vector<R> values_;
};

/// Coefficients a(0..limit) of F_g with the invariant a(0) = 1.
template <CoefficientRing R = Rational>
class CoefficientSequence {
 public:
  explicit CoefficientSequence(std::vector<R> values)
      : values_(std::move(values)) {
    if (values_.empty() || !(values_[0] == RingTraits<R>::one())) {
      throw std::invalid_argument("coefficient sequences start with a(0) = 1");
    }
  }

  /// Highest index stored.
  std::size_t limit() const noexcept { return values_.size() - 1; }

  /// a(n), 0 <= n <= limit().
  const R& at(std::size_t n) const {
    if (n >= values_.size()) {
      throw std::out_of_range("coefficient index out of range");
    }
    return values_[n];
  }

  const std::vector<R>& values() const noexcept { return values_; }

 private:
  std::vector<R> values_;
};

/// beta_g(m) = (1/m) sum_{d|m} mu(d) g(m/d) for m = 1..limit.
template <CoefficientRing R>
BellExponentSequence<R> bell_exponents(const Driver<R>& g, std::size_t limit) {
  std::vector<R> values;
  values.reserve(limit);
  for (std::size_t m = 1; m <= limit; ++m) {
    R acc = RingTraits<R>::zero();
    for (std::uint64_t d : divisors(m)) {
      int mu = mobius(d);
      if (mu == 0) {
        continue;
      }
      R term = g(m / d);
      if (mu > 0) {
        acc = acc + term;
      } else {
        acc = acc - term;
      }
    }
    values.push_back(RingTraits<R>::div_int(acc, m));
  }
  return BellExponentSequence<R>(std::move(values));
}

inline BellExponentSequence<> bell_exponents(const ArithmeticFunction& g,
                                             std::size_t limit) {
  return bell_exponents<Rational>(g.driver(), limit);
}

/// Inverse of bell_exponents: g(n) = sum_{d|n} d beta(d), n = 1..limit.
template <CoefficientRing R>
std::vector<R> inverse_exponents(const BellExponentSequence<R>& beta) {
  std::vector<R> g;
  g.reserve(beta.limit());
  for (std::size_t n = 1; n <= beta.limit(); ++n) {
    R acc = RingTraits<R>::zero();
    for (std::uint64_t d : divisors(n)) {
      acc = acc + beta.at(d) * RingTraits<R>::from_rational(
                                   Rational(static_cast<unsigned long>(d)));
    }
    g.push_back(acc);
  }
  return g;
}

/// Primary coefficient path:
///   a(0) = 1,  n a(n) = -sum_{k=1..n} g(k) a(n-k).
template <CoefficientRing R>
CoefficientSequence<R> coeffs_via_recurrence(const Driver<R>& g,
                                             std::size_t limit) {
  std::vector<R> a(limit + 1, RingTraits<R>::zero());
  a[0] = RingTraits<R>::one();
  std::vector<R> gv(limit + 1, RingTraits<R>::zero());
  for (std::size_t k = 1; k <= limit; ++k) {
    gv[k] = g(k);
  }
  for (std::size_t n = 1; n <= limit; ++n) {
    R acc = RingTraits<R>::zero();
    for (std::size_t k = 1; k <= n; ++k) {
      acc = acc + gv[k] * a[n - k];
    }
    a[n] = RingTraits<R>::div_int(-acc, n);
  }
  return CoefficientSequence<R>(std::move(a));
}

inline CoefficientSequence<> coeffs_via_recurrence(const ArithmeticFunction& g,
                                                   std::size_t limit) {
  return coeffs_via_recurrence<Rational>(g.driver(), limit);
}

/// Complete Bell polynomials B_0..B_n evaluated at x = (x_1, .., x_n):
///   B_{n+1} = sum_{i=0..n} binom(n, i) B_{n-i} x_{i+1},  B_0 = 1.
template <CoefficientRing R>
std::vector<R> complete_bell(std::span<const R> x) {
  const std::size_t n = x.size();
  std::vector<R> b;
  b.reserve(n + 1);
  b.push_back(RingTraits<R>::one());
  for (std::size_t m = 0; m < n; ++m) {
    // b[m + 1] from the binomial recursion over row m of Pascal's triangle.
    R acc = RingTraits<R>::zero();
    for (std::size_t i = 0; i <= m; ++i) {
      R weight = RingTraits<R>::from_rational(Rational(binomial(m, i)));
      acc = acc + weight * (b[m - i] * x[i]);
    }
    b.push_back(acc);
  }
  return b;
}

/// Secondary coefficient path through the complete Bell polynomials:
///   a(n) = B_n(-0! g(1), -1! g(2), ..., -(n-1)! g(n)) / n!.
template <CoefficientRing R>
CoefficientSequence<R> coeffs_via_bell_poly(const Driver<R>& g,
                                            std::size_t limit) {
  std::vector<R> x;
  x.reserve(limit);
  for (std::size_t m = 1; m <= limit; ++m) {
    Rational f(factorial(m - 1));
    x.push_back(g(m) * RingTraits<R>::from_rational(-f));
  }
  std::vector<R> b = complete_bell<R>(std::span<const R>(x));
  std::vector<R> a;
  a.reserve(limit + 1);
  for (std::size_t n = 0; n <= limit; ++n) {
    Rational inv_f(1);
    inv_f /= Rational(factorial(n));
    a.push_back(b[n] * RingTraits<R>::from_rational(inv_f));
  }
  return CoefficientSequence<R>(std::move(a));
}

inline CoefficientSequence<> coeffs_via_bell_poly(const ArithmeticFunction& g,
                                                  std::size_t limit) {
  return coeffs_via_bell_poly<Rational>(g.driver(), limit);
}

/// Third coefficient path through the Euler product over the exponents.
template <CoefficientRing R>
CoefficientSequence<R> coeffs_via_product(const Driver<R>& g,
                                          std::size_t limit) {
  BellExponentSequence<R> beta = bell_exponents<R>(g, limit);
  PowerSeries<R> series = euler_product<R>(beta.values(), limit);
  return CoefficientSequence<R>(series.coeffs());
}

inline CoefficientSequence<> coeffs_via_product(const ArithmeticFunction& g,
                                                std::size_t limit) {
  return coeffs_via_product<Rational>(g.driver(), limit);
}

/// Recovers the driver from coefficients:
///   g(n) = -n a(n) - sum_{k=1..n-1} g(k) a(n-k).
template <CoefficientRing R>
std::vector<R> recover_driver(const CoefficientSequence<R>& a) {
  const std::size_t limit = a.limit();
  std::vector<R> g(limit + 1, RingTraits<R>::zero());  // g[0] unused
  for (std::size_t n = 1; n <= limit; ++n) {
    R acc = a.at(n) * RingTraits<R>::from_rational(
                          -Rational(static_cast<unsigned long>(n)));
    for (std::size_t k = 1; k < n; ++k) {
      acc = acc - g[k] * a.at(n - k);
    }
    g[n] = acc;
  }
  g.erase(g.begin());
  return g;
}

}  // namespace bellkit
