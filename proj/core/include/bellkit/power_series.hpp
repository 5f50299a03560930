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
#include <stdexcept>
#include <vector>

#include "bellkit/rational.hpp"

namespace bellkit {

/// Truncated formal power series over a coefficient ring R, stored densely
/// as coefficients 0..order. Binary operations require equal orders; callers
/// truncate first. Exact rings give exact results throughout; the double
/// ring is approximate by nature.
template <CoefficientRing R>
class PowerSeries {
 public:
  /// The zero series of the given truncation order.
  explicit PowerSeries(std::size_t order)
      : coeffs_(order + 1, RingTraits<R>::zero()) {}

  static PowerSeries one(std::size_t order) {
    PowerSeries s(order);
    s[0] = RingTraits<R>::one();
    return s;
  }

  static PowerSeries from_coeffs(std::vector<R> coeffs) {
    if (coeffs.empty()) {
      throw std::invalid_argument("a power series needs a coefficient 0");
    }
    PowerSeries s(coeffs.size() - 1);
    s.coeffs_ = std::move(coeffs);
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }

  const R& operator[](std::size_t i) const { return coeffs_.at(i); }
  R& operator[](std::size_t i) { return coeffs_.at(i); }

  const std::vector<R>& coeffs() const noexcept { return coeffs_; }

  bool operator==(const PowerSeries& rhs) const {
    return coeffs_ == rhs.coeffs_;
  }

 private:
  std::vector<R> coeffs_;
};

namespace detail {

inline void require_equal_orders(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument(
        "series operands have different truncation orders (" +
        std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace detail

/// Copy truncated (or zero-extended) to the given order.
template <CoefficientRing R>
PowerSeries<R> truncate(const PowerSeries<R>& s, std::size_t order) {
  PowerSeries<R> result(order);
  for (std::size_t i = 0; i <= order && i <= s.order(); ++i) {
    result[i] = s[i];
  }
  return result;
}

template <CoefficientRing R>
PowerSeries<R> operator+(const PowerSeries<R>& a, const PowerSeries<R>& b) {
  detail::require_equal_orders(a.order(), b.order());
  PowerSeries<R> result(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    result[i] = a[i] + b[i];
  }
  return result;
}

template <CoefficientRing R>
PowerSeries<R> operator-(const PowerSeries<R>& a, const PowerSeries<R>& b) {
  detail::require_equal_orders(a.order(), b.order());
  PowerSeries<R> result(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    result[i] = a[i] - b[i];
  }
  return result;
}

template <CoefficientRing R>
PowerSeries<R> operator-(const PowerSeries<R>& a) {
  PowerSeries<R> result(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    result[i] = -a[i];
  }
  return result;
}

/// Cauchy product truncated at the common order.
template <CoefficientRing R>
PowerSeries<R> operator*(const PowerSeries<R>& a, const PowerSeries<R>& b) {
  detail::require_equal_orders(a.order(), b.order());
  const std::size_t n = a.order();
  PowerSeries<R> result(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == RingTraits<R>::zero()) {
      continue;
    }
    for (std::size_t j = 0; i + j <= n; ++j) {
      result[i + j] = result[i + j] + a[i] * b[j];
    }
  }
  return result;
}

/// Coefficientwise scaling by an exact rational.
template <CoefficientRing R>
PowerSeries<R> scale(const PowerSeries<R>& a, const Rational& factor) {
  PowerSeries<R> result(a.order());
  const R f = RingTraits<R>::from_rational(factor);
  for (std::size_t i = 0; i <= a.order(); ++i) {
    result[i] = a[i] * f;
  }
  return result;
}

/// exp of a series with zero constant term, via the differential recurrence
///   n E(n) = sum_{k=1..n} k a(k) E(n-k),  E(0) = 1.
template <CoefficientRing R>
PowerSeries<R> exp(const PowerSeries<R>& a) {
  if (!(a[0] == RingTraits<R>::zero())) {
    throw std::domain_error("series exp needs a zero constant term");
  }
  const std::size_t n = a.order();
  PowerSeries<R> result(n);
  result[0] = RingTraits<R>::one();
  std::vector<R> ka(n + 1, RingTraits<R>::zero());  // ka[k] = k * a(k)
  for (std::size_t k = 1; k <= n; ++k) {
    ka[k] = a[k] * RingTraits<R>::from_rational(
                       Rational(static_cast<unsigned long>(k)));
  }
  for (std::size_t m = 1; m <= n; ++m) {
    R acc = RingTraits<R>::zero();
    for (std::size_t k = 1; k <= m; ++k) {
      acc = acc + ka[k] * result[m - k];
    }
    result[m] = RingTraits<R>::div_int(acc, m);
  }
  return result;
}

/// log of a series with constant term 1, via
///   n L(n) = n a(n) - sum_{k=1..n-1} k L(k) a(n-k),  L(0) = 0.
template <CoefficientRing R>
PowerSeries<R> log(const PowerSeries<R>& a) {
  if (!(a[0] == RingTraits<R>::one())) {
    throw std::domain_error("series log needs constant term 1");
  }
  const std::size_t n = a.order();
  PowerSeries<R> result(n);
  for (std::size_t m = 1; m <= n; ++m) {
    R acc = a[m] * RingTraits<R>::from_rational(
                       Rational(static_cast<unsigned long>(m)));
    for (std::size_t k = 1; k < m; ++k) {
      R kl = result[k] * RingTraits<R>::from_rational(
                             Rational(static_cast<unsigned long>(k)));
      acc = acc - kl * a[m - k];
    }
    result[m] = RingTraits<R>::div_int(acc, m);
  }
  return result;
}

/// a^e for exact rational e, as exp(e log a). Requires constant term 1.
template <CoefficientRing R>
PowerSeries<R> pow_rational(const PowerSeries<R>& a, const Rational& e) {
  return exp(scale(log(a), e));
}

/// prod_{m=1..order} (1 - x^m)^{beta(m)} truncated at the given order, with
/// beta[m-1] the exponent of the m-th factor (factors past the order cannot
/// contribute). Each factor is expanded by the generalized binomial theorem
///   (1 - x^m)^b = sum_j C(b, j) (-x^m)^j,
/// which keeps this path independent of exp/log and valid for exponents in
/// any commutative ring containing the rationals.
template <CoefficientRing R>
PowerSeries<R> euler_product(const std::vector<R>& beta, std::size_t order) {
  if (beta.size() < order) {
    throw std::invalid_argument(
        "euler_product needs exponents beta(1..order)");
  }
  PowerSeries<R> acc = PowerSeries<R>::one(order);
  std::vector<R> next(order + 1, RingTraits<R>::zero());
  for (std::size_t m = 1; m <= order; ++m) {
    const R& b = beta[m - 1];
    if (b == RingTraits<R>::zero()) {
      continue;
    }
    // c[j] = C(b, j) (-1)^j via c[j] = c[j-1] (j - 1 - b) / j.
    std::vector<R> c{RingTraits<R>::one()};
    for (std::size_t j = 1; m * j <= order; ++j) {
      R step = RingTraits<R>::from_rational(
                   Rational(static_cast<unsigned long>(j - 1))) -
               b;
      c.push_back(RingTraits<R>::div_int(c[j - 1] * step, j));
    }
    for (std::size_t i = 0; i <= order; ++i) {
      R sum = acc[i];
      for (std::size_t j = 1; j < c.size() && m * j <= i; ++j) {
        sum = sum + c[j] * acc[i - m * j];
      }
      next[i] = sum;
    }
    for (std::size_t i = 0; i <= order; ++i) {
      acc[i] = next[i];
    }
  }
  return acc;
}

}  // namespace bellkit
