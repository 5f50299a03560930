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

#include "bellkit/polyfam.hpp"

#include <memory>
#include <stdexcept>
#include <utility>

namespace bellkit {

namespace {

void check_driver_index(std::uint64_t n, std::size_t max_index) {
  if (n == 0 || n > max_index) {
    throw std::domain_error("family driver evaluated outside 1.." +
                            std::to_string(max_index));
  }
}

void check_charlier_parameter(const FamilySpec& spec) {
  if (spec.family == Family::Charlier && spec.a == 0) {
    throw std::domain_error("charlier parameter a must be nonzero");
  }
}

// 1/2 - x, the shared n = 1 driver value of the Bernoulli and Euler
// families.
Polynomial half_minus_x() {
  return Polynomial(std::vector<Rational>{Rational(1, 2), Rational(-1)});
}

std::vector<Rational> powers_of(const Rational& base, std::size_t n_max) {
  std::vector<Rational> powers;
  powers.reserve(n_max + 1);
  powers.push_back(Rational(1));
  for (std::size_t i = 1; i <= n_max; ++i) {
    powers.push_back(Rational(powers.back() * base));
  }
  return powers;
}

}  // namespace

std::vector<Rational> bernoulli_numbers(std::size_t n_max) {
  std::vector<Rational> b;
  b.reserve(n_max + 1);
  b.push_back(Rational(1));
  // sum_{j=0..n} binom(n+1, j) B_j = 0 for n >= 1, solved for B_n.
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational acc(0);
    for (std::size_t j = 0; j < n; ++j) {
      acc += Rational(binomial(n + 1, j)) * b[j];
    }
    b.push_back(Rational(-acc / Rational(static_cast<unsigned long>(n + 1))));
  }
  return b;
}

Family family_from_name(const std::string& name) {
  if (name == "bernoulli") return Family::Bernoulli;
  if (name == "euler") return Family::Euler;
  if (name == "hermite") return Family::Hermite;
  if (name == "charlier") return Family::Charlier;
  if (name == "laguerre") return Family::Laguerre;
  if (name == "touchard") return Family::Touchard;
  throw std::invalid_argument(
      "unknown family '" + name +
      "' (expected bernoulli, euler, hermite, charlier, laguerre or "
      "touchard)");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Bernoulli:
      return "bernoulli";
    case Family::Euler:
      return "euler";
    case Family::Hermite:
      return "hermite";
    case Family::Charlier:
      return "charlier";
    case Family::Laguerre:
      return "laguerre";
    case Family::Touchard:
      return "touchard";
  }
  throw std::invalid_argument("unknown family enumerator");
}

bool family_is_ogf(Family family) { return family == Family::Laguerre; }

Driver<Polynomial> family_driver(const FamilySpec& spec,
                                 std::size_t max_index) {
  check_charlier_parameter(spec);
  switch (spec.family) {
    case Family::Bernoulli: {
      auto b = std::make_shared<const std::vector<Rational>>(
          bernoulli_numbers(max_index));
      return [b, max_index](std::uint64_t n) {
        check_driver_index(n, max_index);
        if (n == 1) {
          return half_minus_x();
        }
        return Polynomial(Rational((*b)[n] / Rational(factorial(n))));
      };
    }
    case Family::Euler: {
      auto b = std::make_shared<const std::vector<Rational>>(
          bernoulli_numbers(max_index));
      return [b, max_index](std::uint64_t n) {
        check_driver_index(n, max_index);
        if (n == 1) {
          return half_minus_x();
        }
        Integer scale = pow_integer(2, n) - 1;
        return Polynomial(
            Rational(Rational(scale) * (*b)[n] / Rational(factorial(n))));
      };
    }
    case Family::Hermite:
      return [max_index](std::uint64_t n) {
        check_driver_index(n, max_index);
        if (n == 1) {
          return Polynomial::monomial(1, Rational(-2));
        }
        if (n == 2) {
          return Polynomial(Rational(2));
        }
        return Polynomial();
      };
    case Family::Charlier: {
      auto apow = std::make_shared<const std::vector<Rational>>(
          powers_of(spec.a, max_index));
      Rational a = spec.a;
      return [a, apow, max_index](std::uint64_t n) {
        check_driver_index(n, max_index);
        if (n == 1) {
          // a - x/a
          return Polynomial(
              std::vector<Rational>{a, Rational(Rational(-1) / a)});
        }
        Rational c = Rational(Rational(n % 2 == 0 ? 1 : -1) / (*apow)[n]);
        return Polynomial::monomial(1, c);
      };
    }
    case Family::Laguerre: {
      Rational shift = Rational(spec.alpha + 1);
      return [shift, max_index](std::uint64_t n) {
        check_driver_index(n, max_index);
        // x n - (alpha + 1)
        return Polynomial(std::vector<Rational>{
            -shift, Rational(static_cast<unsigned long>(n))});
      };
    }
    case Family::Touchard:
      return [max_index](std::uint64_t n) {
        check_driver_index(n, max_index);
        Rational c(-1);
        c /= Rational(factorial(n - 1));
        return Polynomial::monomial(1, c);
      };
  }
  throw std::invalid_argument("unknown family enumerator");
}

std::vector<Polynomial> family_table(const FamilySpec& spec,
                                     std::size_t upto) {
  check_charlier_parameter(spec);
  std::vector<Polynomial> p;
  p.reserve(upto + 1);
  p.push_back(Polynomial(Rational(1)));
  switch (spec.family) {
    case Family::Bernoulli: {
      std::vector<Rational> b = bernoulli_numbers(upto);
      Polynomial x_minus_half(
          std::vector<Rational>{Rational(-1, 2), Rational(1)});
      for (std::size_t n = 1; n <= upto; ++n) {
        Polynomial next = x_minus_half * p[n - 1];
        for (std::size_t k = 2; k <= n; ++k) {
          if (b[k] == 0) {
            continue;
          }
          Rational w = Rational(Rational(binomial(n - 1, k - 1)) * b[k] /
                                Rational(static_cast<unsigned long>(k)));
          next -= w * p[n - k];
        }
        p.push_back(std::move(next));
      }
      break;
    }
    case Family::Euler: {
      std::vector<Rational> b = bernoulli_numbers(upto);
      Polynomial x_minus_half(
          std::vector<Rational>{Rational(-1, 2), Rational(1)});
      for (std::size_t n = 1; n <= upto; ++n) {
        Polynomial next = x_minus_half * p[n - 1];
        for (std::size_t k = 2; k <= n; ++k) {
          if (b[k] == 0) {
            continue;
          }
          Integer scale = pow_integer(2, k) - 1;
          Rational w =
              Rational(Rational(binomial(n - 1, k - 1)) * Rational(scale) *
                       b[k] / Rational(static_cast<unsigned long>(k)));
          next -= w * p[n - k];
        }
        p.push_back(std::move(next));
      }
      break;
    }
    case Family::Hermite: {
      Polynomial two_x = Polynomial::monomial(1, Rational(2));
      if (upto >= 1) {
        p.push_back(two_x);
      }
      for (std::size_t n = 2; n <= upto; ++n) {
        Polynomial next = two_x * p[n - 1];
        next -= Rational(static_cast<unsigned long>(2 * (n - 1))) * p[n - 2];
        p.push_back(std::move(next));
      }
      break;
    }
    case Family::Charlier: {
      std::vector<Rational> apow = powers_of(spec.a, upto);
      // -(a - x/a) = x/a - a
      Polynomial lead(
          std::vector<Rational>{-spec.a, Rational(Rational(1) / spec.a)});
      for (std::size_t n = 1; n <= upto; ++n) {
        Polynomial next = lead * p[n - 1];
        for (std::size_t k = 2; k <= n; ++k) {
          Integer count = binomial(n - 1, k - 1) * factorial(k - 1);
          Rational w = Rational(Rational(k % 2 == 0 ? 1 : -1) *
                                Rational(count) / apow[k]);
          next -= Polynomial::monomial(1, w) * p[n - k];
        }
        p.push_back(std::move(next));
      }
      break;
    }
    case Family::Laguerre: {
      Rational shift = Rational(spec.alpha + 1);
      for (std::size_t n = 1; n <= upto; ++n) {
        Polynomial acc;
        for (std::size_t k = 1; k <= n; ++k) {
          Polynomial factor(std::vector<Rational>{
              -shift, Rational(static_cast<unsigned long>(k))});
          acc += factor * p[n - k];
        }
        Rational inv_n(-1);
        inv_n /= Rational(static_cast<unsigned long>(n));
        p.push_back(acc * inv_n);
      }
      break;
    }
    case Family::Touchard: {
      for (std::size_t n = 1; n <= upto; ++n) {
        Polynomial acc;
        for (std::size_t j = 0; j < n; ++j) {
          acc += Rational(binomial(n - 1, j)) * p[j];
        }
        p.push_back(Polynomial::monomial(1, Rational(1)) * acc);
      }
      break;
    }
  }
  return p;
}

Polynomial family_poly(const FamilySpec& spec, std::size_t n) {
  return family_table(spec, n)[n];
}

Polynomial family_poly_via_bell(const FamilySpec& spec, std::size_t n) {
  Driver<Polynomial> g = family_driver(spec, n == 0 ? 1 : n);
  CoefficientSequence<Polynomial> a = coeffs_via_recurrence<Polynomial>(g, n);
  if (family_is_ogf(spec.family)) {
    return a.at(n);
  }
  return a.at(n) * Rational(factorial(n));
}

}  // namespace bellkit
