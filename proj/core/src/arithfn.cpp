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

#include "bellkit/arithfn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace bellkit {

namespace {

constexpr std::uint64_t kDefaultSieveBound = 1'000'000;

std::uint64_t sieve_bound_from_env() {
  const char* raw = std::getenv("BELLKIT_SIEVE_BOUND");
  if (raw == nullptr || *raw == '\0') {
    return kDefaultSieveBound;
  }
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed < 2) {
    return kDefaultSieveBound;  // malformed override: fall back silently
  }
  return static_cast<std::uint64_t>(parsed);
}

struct SpfSieve {
  std::uint64_t bound;
  std::vector<std::uint32_t> spf;  // smallest prime factor, index <= bound

  explicit SpfSieve(std::uint64_t limit) : bound(limit), spf(limit + 1, 0) {
    for (std::uint64_t i = 2; i <= limit; ++i) {
      if (spf[i] == 0) {
        for (std::uint64_t j = i; j <= limit; j += i) {
          if (spf[j] == 0) {
            spf[j] = static_cast<std::uint32_t>(i);
          }
        }
      }
    }
  }
};

const SpfSieve& sieve() {
  static const SpfSieve instance(
      std::min<std::uint64_t>(sieve_bound_from_env(), 1u << 30));
  return instance;
}

void check_positive(std::uint64_t n) {
  if (n == 0) {
    throw std::domain_error("arithmetic functions are defined for n >= 1");
  }
}

}  // namespace

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  check_positive(n);
  std::vector<std::pair<std::uint64_t, int>> factors;
  const SpfSieve& s = sieve();
  while (n > 1 && n <= s.bound) {
    std::uint64_t p = s.spf[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (n > 1) {
    // Above the sieve: trial division by 2 and odd candidates.
    for (std::uint64_t p = 2; p * p <= n; p = (p == 2 ? 3 : p + 2)) {
      if (n % p != 0) {
        continue;
      }
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
    if (n > 1) {
      factors.emplace_back(n, 1);
    }
    std::sort(factors.begin(), factors.end());
  }
  return factors;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  check_positive(n);
  std::vector<std::uint64_t> result{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base_count = result.size();
    std::uint64_t power = 1;
    for (int i = 1; i <= e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base_count; ++j) {
        result.push_back(result[j] * power);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  auto factors = factorize(n);
  return factors.size() == 1 && factors[0].second == 1;
}

int mobius(std::uint64_t n) {
  check_positive(n);
  int result = 1;
  for (const auto& [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) {
      return 0;
    }
    result = -result;
  }
  return result;
}

Rational dirichlet_convolve(const std::function<Rational(std::uint64_t)>& f,
                            const std::function<Rational(std::uint64_t)>& g,
                            std::uint64_t n) {
  check_positive(n);
  Rational acc(0);
  for (std::uint64_t d : divisors(n)) {
    acc += f(d) * g(n / d);
  }
  return acc;
}

Rational euler_phi(std::uint64_t n) { return jordan_totient(1, n); }

Rational jordan_totient(std::uint64_t k, std::uint64_t n) {
  check_positive(n);
  // J_k(n) = prod over p^e || n of p^(k(e-1)) (p^k - 1).
  Integer result(1);
  for (const auto& [p, e] : factorize(n)) {
    Integer pk = pow_integer(p, k);
    Integer term = pk - 1;
    for (int i = 1; i < e; ++i) {
      term *= pk;
    }
    result *= term;
  }
  return Rational(result);
}

Rational sigma(std::uint64_t k, std::uint64_t n) {
  check_positive(n);
  Integer result(1);
  for (const auto& [p, e] : factorize(n)) {
    // Geometric sum 1 + p^k + ... + p^(ke).
    Integer pk = pow_integer(p, k);
    Integer term(1);
    Integer power(1);
    for (int i = 1; i <= e; ++i) {
      power *= pk;
      term += power;
    }
    result *= term;
  }
  return Rational(result);
}

Rational ramanujan_sum(std::uint64_t q, std::uint64_t n) {
  if (q == 0) {
    throw std::domain_error("ramanujan_sum requires q >= 1");
  }
  check_positive(n);
  Integer acc(0);
  for (std::uint64_t d : divisors(std::gcd(q, n))) {
    acc += Integer(static_cast<unsigned long>(d)) * mobius(q / d);
  }
  return Rational(acc);
}

int chi4(std::uint64_t n) {
  check_positive(n);
  switch (n % 4) {
    case 1:
      return 1;
    case 3:
      return -1;
    default:
      return 0;
  }
}

Rational r4(std::uint64_t n) {
  check_positive(n);
  Rational result = Rational(8) * sigma(1, n);
  if (n % 4 == 0) {
    result -= Rational(32) * sigma(1, n / 4);
  }
  return result;
}

double von_mangoldt(std::uint64_t n) {
  check_positive(n);
  if (n == 1) {
    return 0.0;
  }
  auto factors = factorize(n);
  if (factors.size() != 1) {
    return 0.0;
  }
  return std::log(static_cast<double>(factors[0].first));
}

ArithmeticFunction::ArithmeticFunction(std::string name,
                                       std::vector<Rational> params,
                                       Evaluator eval)
    : name_(std::move(name)),
      params_(std::move(params)),
      eval_(std::make_shared<const Evaluator>(std::move(eval))) {
  if (!*eval_) {
    throw std::invalid_argument("arithmetic function requires an evaluator");
  }
}

Rational ArithmeticFunction::operator()(std::uint64_t n) const {
  check_positive(n);
  return (*eval_)(n);
}

ArithmeticFunction::Evaluator ArithmeticFunction::driver() const {
  return [eval = eval_](std::uint64_t n) {
    check_positive(n);
    return (*eval)(n);
  };
}

namespace {

void require_arity(const std::string& name,
                   const std::vector<Rational>& params, std::size_t expected) {
  if (params.size() != expected) {
    throw std::invalid_argument("driver '" + name + "' expects " +
                                std::to_string(expected) +
                                " parameter(s), got " +
                                std::to_string(params.size()));
  }
}

std::uint64_t integer_param(const std::string& name, const Rational& value,
                            std::uint64_t minimum) {
  if (!is_integral(value) || value < Rational(static_cast<long>(minimum))) {
    throw std::invalid_argument("driver '" + name +
                                "' expects an integer parameter >= " +
                                std::to_string(minimum));
  }
  if (!value.get_num().fits_ulong_p()) {
    throw std::invalid_argument("driver '" + name + "' parameter is too large");
  }
  return value.get_num().get_ui();
}

}  // namespace

ArithmeticFunction builtin_driver(const std::string& name,
                                  const std::vector<Rational>& params) {
  if (name == "epsilon") {
    require_arity(name, params, 0);
    return ArithmeticFunction(name, [](std::uint64_t n) {
      return Rational(n == 1 ? 1 : 0);
    });
  }
  if (name == "power_k") {
    require_arity(name, params, 1);
    std::uint64_t k = integer_param(name, params[0], 0);
    return ArithmeticFunction(name, params, [k](std::uint64_t n) {
      return Rational(pow_integer(n, k));
    });
  }
  if (name == "chi4") {
    require_arity(name, params, 0);
    return ArithmeticFunction(
        name, [](std::uint64_t n) { return Rational(chi4(n)); });
  }
  if (name == "phi") {
    require_arity(name, params, 0);
    return ArithmeticFunction(name,
                              [](std::uint64_t n) { return euler_phi(n); });
  }
  if (name == "ramanujan_q") {
    require_arity(name, params, 1);
    std::uint64_t q = integer_param(name, params[0], 1);
    return ArithmeticFunction(name, params, [q](std::uint64_t n) {
      return ramanujan_sum(q, n);
    });
  }
  if (name == "r4") {
    require_arity(name, params, 0);
    return ArithmeticFunction(name, [](std::uint64_t n) { return r4(n); });
  }
  if (name == "constant_c") {
    require_arity(name, params, 1);
    Rational c = params[0];
    return ArithmeticFunction(name, params,
                              [c](std::uint64_t) { return c; });
  }
  if (name == "log_float") {
    throw std::invalid_argument(
        "driver 'log_float' is float-valued; use log_float_driver()");
  }
  if (name == "custom_file") {
    throw std::invalid_argument(
        "driver 'custom_file' needs a file path; use load_driver_file()");
  }
  throw std::invalid_argument("unknown driver '" + name + "'");
}

std::function<double(std::uint64_t)> log_float_driver() {
  return [](std::uint64_t n) {
    if (n == 0) {
      throw std::domain_error("arithmetic functions are defined for n >= 1");
    }
    return std::log(static_cast<double>(n));
  };
}

ArithmeticFunction load_driver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open driver file '" + path + "'");
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("driver file '" + path + "': " + e.what());
  }
  if (!doc.is_object() || !doc.contains("name") || !doc["name"].is_string() ||
      !doc.contains("values") || !doc["values"].is_array()) {
    throw std::runtime_error(
        "driver file '" + path +
        "': expected an object with string \"name\" and array \"values\"");
  }
  std::string name = doc["name"].get<std::string>();
  auto values = std::make_shared<std::vector<Rational>>();
  values->reserve(doc["values"].size());
  for (std::size_t i = 0; i < doc["values"].size(); ++i) {
    const auto& entry = doc["values"][i];
    if (!entry.is_string()) {
      throw std::runtime_error("driver file '" + path + "': values[" +
                               std::to_string(i) + "] is not a string");
    }
    try {
      values->push_back(parse_rational(entry.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("driver file '" + path + "': values[" +
                               std::to_string(i) + "]: " + e.what());
    }
  }
  return ArithmeticFunction(
      name, [values, name](std::uint64_t n) {
        if (n > values->size()) {
          throw std::domain_error(
              "driver '" + name + "' is defined only for n <= " +
              std::to_string(values->size()));
        }
        return (*values)[n - 1];
      });
}

}  // namespace bellkit
