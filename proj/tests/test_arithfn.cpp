#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bellkit/arithfn.hpp>
#include <bellkit/rational.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

using bellkit::Rational;

namespace {

std::string write_temp(const std::string& tag, const std::string& body) {
  std::string path = "/tmp/bellkit_arithfn_" + tag + ".json";
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("factorize handles small inputs and inputs beyond the sieve") {
  CHECK(bellkit::factorize(1).empty());
  CHECK(bellkit::factorize(2) ==
        std::vector<std::pair<std::uint64_t, int>>{{2, 1}});
  CHECK(bellkit::factorize(360) ==
        std::vector<std::pair<std::uint64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(bellkit::factorize(1024) ==
        std::vector<std::pair<std::uint64_t, int>>{{2, 10}});
  // 1000003 is prime and larger than the default sieve bound.
  CHECK(bellkit::factorize(1000003) ==
        std::vector<std::pair<std::uint64_t, int>>{{1000003, 1}});
  CHECK(bellkit::factorize(2000006) ==
        std::vector<std::pair<std::uint64_t, int>>{{2, 1}, {1000003, 1}});
  CHECK_THROWS_AS(bellkit::factorize(0), std::domain_error);

  for (std::uint64_t n = 1; n <= 2000; ++n) {
    std::uint64_t product = 1;
    std::uint64_t last_prime = 0;
    for (auto [p, e] : bellkit::factorize(n)) {
      CHECK(p > last_prime);
      last_prime = p;
      for (int i = 0; i < e; ++i) {
        product *= p;
      }
    }
    CHECK(product == n);
  }
}

TEST_CASE("divisors are ascending and complete") {
  CHECK(bellkit::divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(bellkit::divisors(12) ==
        std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::vector<std::uint64_t> brute;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) {
        brute.push_back(d);
      }
    }
    CHECK(bellkit::divisors(n) == brute);
  }
}

TEST_CASE("primality") {
  CHECK_FALSE(bellkit::is_prime(1));
  CHECK(bellkit::is_prime(2));
  CHECK(bellkit::is_prime(3));
  CHECK_FALSE(bellkit::is_prime(4));
  CHECK(bellkit::is_prime(97));
  CHECK_FALSE(bellkit::is_prime(561));  // Carmichael number
  CHECK(bellkit::is_prime(1000003));
  CHECK_FALSE(bellkit::is_prime(1000003ULL * 3));
}

TEST_CASE("mobius sums to the identity under the divisor sum") {
  CHECK(bellkit::mobius(1) == 1);
  CHECK(bellkit::mobius(2) == -1);
  CHECK(bellkit::mobius(4) == 0);
  CHECK(bellkit::mobius(6) == 1);
  CHECK(bellkit::mobius(30) == -1);
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    long sum = 0;
    for (std::uint64_t d : bellkit::divisors(n)) {
      sum += bellkit::mobius(d);
    }
    CHECK(sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("dirichlet convolution with mobius inverts the divisor sum") {
  const std::uint64_t limit = 2000;
  std::mt19937_64 rng(20260816);
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<Rational> f(limit + 1);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    f[n] = Rational(dist(rng));
  }
  std::vector<Rational> big(limit + 1);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    Rational sum = 0;
    for (std::uint64_t d : bellkit::divisors(n)) {
      sum += f[d];
    }
    big[n] = sum;
  }
  auto mu = [](std::uint64_t n) { return Rational(bellkit::mobius(n)); };
  auto lookup = [&big](std::uint64_t n) { return big[n]; };
  for (std::uint64_t n = 1; n <= limit; ++n) {
    CHECK(bellkit::dirichlet_convolve(mu, lookup, n) == f[n]);
  }
}

TEST_CASE("euler phi counts coprime residues") {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (std::gcd(k, n) == 1) {
        ++count;
      }
    }
    CHECK(bellkit::euler_phi(n) == Rational(count));
  }
  // phi = mu * Id.
  auto mu = [](std::uint64_t n) { return Rational(bellkit::mobius(n)); };
  auto id = [](std::uint64_t n) { return Rational(n); };
  for (std::uint64_t n = 1; n <= 300; ++n) {
    CHECK(bellkit::dirichlet_convolve(mu, id, n) == bellkit::euler_phi(n));
  }
}

TEST_CASE("jordan totient matches its mobius expansion") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    CHECK(bellkit::jordan_totient(1, n) == bellkit::euler_phi(n));
  }
  for (std::uint64_t k : {2, 3}) {
    auto mu = [](std::uint64_t n) { return Rational(bellkit::mobius(n)); };
    auto pw = [k](std::uint64_t n) {
      return Rational(bellkit::pow_integer(n, k));
    };
    for (std::uint64_t n = 1; n <= 200; ++n) {
      CHECK(bellkit::jordan_totient(k, n) ==
            bellkit::dirichlet_convolve(mu, pw, n));
    }
  }
  CHECK(bellkit::jordan_totient(2, 12) == Rational(96));
}

TEST_CASE("sigma matches brute-force divisor sums") {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    Rational count = 0;
    Rational sum = 0;
    Rational squares = 0;
    for (std::uint64_t d : bellkit::divisors(n)) {
      count += 1;
      sum += Rational(d);
      squares += Rational(d) * Rational(d);
    }
    CHECK(bellkit::sigma(0, n) == count);
    CHECK(bellkit::sigma(1, n) == sum);
    CHECK(bellkit::sigma(2, n) == squares);
  }
  CHECK(bellkit::sigma(1, 6) == Rational(12));
}

TEST_CASE("ramanujan sums agree with Hoelder's evaluation") {
  for (std::uint64_t q = 1; q <= 60; ++q) {
    for (std::uint64_t n = 1; n <= 60; ++n) {
      std::uint64_t g = std::gcd(n, q);
      Rational hoelder = Rational(bellkit::mobius(q / g)) *
                         bellkit::euler_phi(q) / bellkit::euler_phi(q / g);
      CHECK(bellkit::ramanujan_sum(q, n) == hoelder);
    }
  }
  // Orthogonality: a full period sums to zero for q > 1.
  for (std::uint64_t q = 2; q <= 50; ++q) {
    Rational sum = 0;
    for (std::uint64_t n = 1; n <= q; ++n) {
      sum += bellkit::ramanujan_sum(q, n);
    }
    CHECK(sum == Rational(0));
  }
  CHECK(bellkit::ramanujan_sum(12, 1) == Rational(0));
  CHECK(bellkit::ramanujan_sum(12, 12) == Rational(4));
}

TEST_CASE("chi4 is 4-periodic and completely multiplicative") {
  int expected[] = {1, 0, -1, 0, 1, 0, -1, 0};
  for (std::uint64_t n = 1; n <= 8; ++n) {
    CHECK(bellkit::chi4(n) == expected[n - 1]);
  }
  for (std::uint64_t m = 1; m <= 60; ++m) {
    for (std::uint64_t n = 1; n <= 60; ++n) {
      CHECK(bellkit::chi4(m * n) == bellkit::chi4(m) * bellkit::chi4(n));
    }
  }
}

TEST_CASE("r4 equals the brute-force count of four-square representations") {
  for (std::uint64_t n = 1; n <= 50; ++n) {
    long count = 0;
    for (long a = -7; a <= 7; ++a) {
      for (long b = -7; b <= 7; ++b) {
        for (long c = -7; c <= 7; ++c) {
          for (long d = -7; d <= 7; ++d) {
            if (a * a + b * b + c * c + d * d == static_cast<long>(n)) {
              ++count;
            }
          }
        }
      }
    }
    CHECK(bellkit::r4(n) == Rational(count));
  }
  CHECK(bellkit::r4(1) == Rational(8));
  CHECK(bellkit::r4(4) == Rational(24));
}

TEST_CASE("von mangoldt is log p on prime powers and zero elsewhere") {
  CHECK(bellkit::von_mangoldt(1) == 0.0);
  CHECK(bellkit::von_mangoldt(2) == doctest::Approx(std::log(2.0)));
  CHECK(bellkit::von_mangoldt(8) == doctest::Approx(std::log(2.0)));
  CHECK(bellkit::von_mangoldt(9) == doctest::Approx(std::log(3.0)));
  CHECK(bellkit::von_mangoldt(12) == 0.0);
  CHECK(bellkit::von_mangoldt(97) == doctest::Approx(std::log(97.0)));
}

TEST_CASE("builtin driver registry") {
  auto eps = bellkit::builtin_driver("epsilon");
  CHECK(eps(1) == Rational(1));
  CHECK(eps(5) == Rational(0));
  CHECK(eps.name() == "epsilon");

  auto cubes = bellkit::builtin_driver("power_k", {Rational(3)});
  CHECK(cubes(2) == Rational(8));
  CHECK(cubes(10) == Rational(1000));
  CHECK(cubes.params() == std::vector<Rational>{Rational(3)});

  auto ones = bellkit::builtin_driver("power_k", {Rational(0)});
  CHECK(ones(7) == Rational(1));

  auto cq = bellkit::builtin_driver("ramanujan_q", {Rational(12)});
  CHECK(cq(12) == Rational(4));
  CHECK(cq(1) == Rational(0));

  auto constant = bellkit::builtin_driver("constant_c", {Rational(5, 7)});
  CHECK(constant(1) == Rational(5, 7));
  CHECK(constant(100) == Rational(5, 7));

  CHECK(bellkit::builtin_driver("chi4")(3) == Rational(-1));
  CHECK(bellkit::builtin_driver("phi")(12) == Rational(4));
  CHECK(bellkit::builtin_driver("r4")(2) == Rational(24));

  CHECK_THROWS_AS(bellkit::builtin_driver("no_such_driver"),
                  std::invalid_argument);
  CHECK_THROWS_AS(bellkit::builtin_driver("power_k"), std::invalid_argument);
  CHECK_THROWS_AS(bellkit::builtin_driver("power_k", {Rational(-1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(bellkit::builtin_driver("power_k", {Rational(1, 2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(bellkit::builtin_driver("ramanujan_q", {Rational(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(bellkit::builtin_driver("constant_c"),
                  std::invalid_argument);
  CHECK_THROWS_AS(bellkit::builtin_driver("epsilon", {Rational(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(bellkit::builtin_driver("log_float"), std::invalid_argument);
  CHECK_THROWS_AS(bellkit::builtin_driver("custom_file"),
                  std::invalid_argument);
  CHECK_THROWS_AS(eps(0), std::domain_error);
}

TEST_CASE("custom driver files") {
  auto ok = write_temp("ok", R"({"name": "demo", "values": ["1", "-1/2", "3"]})");
  auto fn = bellkit::load_driver_file(ok);
  CHECK(fn.name() == "demo");
  CHECK(fn(1) == Rational(1));
  CHECK(fn(2) == Rational(-1, 2));
  CHECK(fn(3) == Rational(3));
  CHECK_THROWS_AS(fn(4), std::domain_error);

  CHECK_THROWS_AS(bellkit::load_driver_file("/tmp/bellkit_missing_file.json"),
                  std::runtime_error);
  auto broken = write_temp("broken", "{not json");
  CHECK_THROWS_AS(bellkit::load_driver_file(broken), std::runtime_error);
  auto no_name = write_temp("no_name", R"({"values": ["1"]})");
  CHECK_THROWS_AS(bellkit::load_driver_file(no_name), std::runtime_error);
  auto no_values = write_temp("no_values", R"({"name": "x"})");
  CHECK_THROWS_AS(bellkit::load_driver_file(no_values), std::runtime_error);
  auto bad_entry = write_temp("bad_entry",
                              R"({"name": "x", "values": ["1", "1/0"]})");
  CHECK_THROWS_AS(bellkit::load_driver_file(bad_entry), std::runtime_error);
  auto not_strings = write_temp("not_strings",
                                R"({"name": "x", "values": [1, 2]})");
  CHECK_THROWS_AS(bellkit::load_driver_file(not_strings), std::runtime_error);
}

TEST_CASE("float log driver") {
  auto g = bellkit::log_float_driver();
  CHECK(g(1) == 0.0);
  CHECK(g(2) == doctest::Approx(std::log(2.0)));
  CHECK(g(10) == doctest::Approx(std::log(10.0)));
  CHECK_THROWS_AS(g(0), std::domain_error);
}
