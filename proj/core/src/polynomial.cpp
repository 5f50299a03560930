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

#include "bellkit/polynomial.hpp"

#include <stdexcept>

namespace bellkit {

namespace {
const Rational kZero(0);
}  // namespace

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) {
    coeffs_.push_back(constant);
  }
}

Polynomial::Polynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::monomial(std::size_t degree, const Rational& coeff) {
  Polynomial result;
  if (coeff != 0) {
    result.coeffs_.assign(degree + 1, kZero);
    result.coeffs_[degree] = coeff;
  }
  return result;
}

const Rational& Polynomial::coeff(std::size_t i) const {
  if (i < coeffs_.size()) {
    return coeffs_[i];
  }
  return kZero;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + coeffs_[i];
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) {
    return Polynomial();
  }
  std::vector<Rational> result(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    result[i - 1] = coeffs_[i] * Rational(static_cast<unsigned long>(i));
  }
  return Polynomial(std::move(result));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), kZero);
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), kZero);
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> result(coeffs_.size() + rhs.coeffs_.size() - 1, kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      result[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(result);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Rational& c : coeffs_) {
    c *= scalar;
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial result(*this);
  for (Rational& c : result.coeffs_) {
    c = -c;
  }
  return result;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) {
    throw std::domain_error("polynomial division by zero");
  }
  if (is_zero()) {
    return Polynomial();
  }
  if (degree() < divisor.degree()) {
    throw std::domain_error("polynomial division leaves a remainder");
  }
  std::vector<Rational> remainder = coeffs_;
  std::vector<Rational> quotient(coeffs_.size() - divisor.coeffs_.size() + 1,
                                 kZero);
  const Rational& lead = divisor.coeffs_.back();
  for (std::size_t i = quotient.size(); i-- > 0;) {
    Rational factor = remainder[i + divisor.coeffs_.size() - 1] / lead;
    quotient[i] = factor;
    if (factor == 0) {
      continue;
    }
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) {
      remainder[i + j] -= factor * divisor.coeffs_[j];
    }
  }
  for (const Rational& c : remainder) {
    if (c != 0) {
      throw std::domain_error("polynomial division leaves a remainder");
    }
  }
  return Polynomial(std::move(quotient));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Rational& c = p.coeff(i);
    if (c == 0) {
      continue;
    }
    Rational magnitude = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) {
        out += "-";
      }
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = magnitude == 1;
    if (i == 0 || !unit) {
      out += to_string(magnitude);
    }
    if (i > 0) {
      if (!unit) {
        out += "*";
      }
      out += "x";
      if (i > 1) {
        out += "^" + std::to_string(i);
      }
    }
  }
  return out;
}

}  // namespace bellkit
