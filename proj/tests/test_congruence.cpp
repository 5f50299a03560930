#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bellkit/arithfn.hpp>
#include <bellkit/bell.hpp>
#include <bellkit/congruence.hpp>
#include <bellkit/polynomial.hpp>
#include <bellkit/power_series.hpp>
#include <bellkit/rational.hpp>

#include <cstdint>
#include <numeric>
#include <vector>

using bellkit::BellExponentSequence;
using bellkit::Integer;
using bellkit::Polynomial;
using bellkit::PowerSeries;
using bellkit::Rational;

namespace {

bellkit::Driver<Rational> sigma_scaled(long factor) {
  return [factor](std::uint64_t n) {
    return Rational(Rational(factor) * bellkit::sigma(1, n));
  };
}

bellkit::Driver<Rational> ramanujan_driver(std::uint64_t q) {
  return [q](std::uint64_t n) { return bellkit::ramanujan_sum(q, n); };
}

}  // namespace

TEST_CASE("p-integrality and residues") {
  CHECK(bellkit::is_p_integral(Rational(7), 5));
  CHECK_FALSE(bellkit::is_p_integral(Rational(1, 2), 2));
  CHECK(bellkit::is_p_integral(Rational(1, 2), 3));
  CHECK_FALSE(bellkit::is_p_integral(Rational(3, 10), 5));

  CHECK(bellkit::residue_mod(Rational(7), 5) == 2);
  CHECK(bellkit::residue_mod(Rational(-1), 5) == 4);
  CHECK(bellkit::residue_mod(Rational(0), 7) == 0);
  // 1/3 = 2 mod 5 since 3 * 2 = 6 = 1.
  CHECK(bellkit::residue_mod(Rational(1, 3), 5) == 2);
  CHECK(bellkit::residue_mod(Rational(-7, 3), 5) == 1);
  CHECK_THROWS_AS(bellkit::residue_mod(Rational(1, 2), 2), std::domain_error);
}

TEST_CASE("tau values match the cube-of-theta oracle") {
  const std::size_t order = 100;
  // prod (1-x^n)^3 = sum_k (-1)^k (2k+1) x^{k(k+1)/2}; the 24th power of
  // the eta-like product is the 8th power of this series.
  PowerSeries<Rational> cube(order);
  for (std::uint64_t k = 0;; ++k) {
    std::uint64_t triangular = k * (k + 1) / 2;
    if (triangular > order) {
      break;
    }
    Rational term(2 * static_cast<long>(k) + 1);
    cube[triangular] = (k % 2 == 0) ? term : -term;
  }
  PowerSeries<Rational> sixth = cube * cube;
  PowerSeries<Rational> twelfth = sixth * sixth;
  PowerSeries<Rational> twentyfourth = twelfth * twelfth;
  auto series = bellkit::tau_series(order);
  for (std::size_t n = 0; n <= order; ++n) {
    CHECK(series.at(n) == twentyfourth[n]);
  }
}

TEST_CASE("tau is multiplicative and satisfies the Hecke recursion") {
  auto t = bellkit::tau(300);
  auto tau_at = [&t](std::uint64_t n) { return t[n - 1]; };
  CHECK(tau_at(1) == 1);
  CHECK(tau_at(2) == -24);
  CHECK(tau_at(3) == 252);
  CHECK(tau_at(4) == -1472);
  CHECK(tau_at(5) == 4830);
  CHECK(tau_at(6) == -6048);
  CHECK(tau_at(7) == -16744);
  CHECK(tau_at(8) == 84480);
  CHECK(tau_at(9) == -113643);
  CHECK(tau_at(10) == -115920);

  for (std::uint64_t m = 2; m <= 300; ++m) {
    for (std::uint64_t n = m + 1; m * n <= 300; ++n) {
      if (std::gcd(m, n) == 1) {
        CHECK(tau_at(m * n) == tau_at(m) * tau_at(n));
      }
    }
  }
  for (std::uint64_t p : {2, 3, 5}) {
    Integer p11 = bellkit::pow_integer(p, 11);
    for (std::uint64_t q = p; q * p <= 300; q *= p) {
      CHECK(tau_at(q * p) == tau_at(p) * tau_at(q) - p11 * tau_at(q / p));
    }
  }
}

TEST_CASE("tau is sigma_11 mod 691") {
  auto t = bellkit::tau(300);
  for (std::uint64_t n = 1; n <= 300; ++n) {
    Integer difference = t[n - 1] - bellkit::sigma(11, n).get_num();
    CHECK(difference % 691 == 0);
  }
}

TEST_CASE("colored partition counts match a direct DP") {
  const std::size_t limit = 120;
  for (std::uint64_t k : {1, 2, 3, 5}) {
    auto counts = bellkit::colored_partitions(k, limit);
    REQUIRE(counts.size() == limit + 1);
    // Parts of every size come in k colors.
    std::vector<Integer> dp(limit + 1, 0);
    dp[0] = 1;
    for (std::uint64_t color = 0; color < k; ++color) {
      for (std::size_t part = 1; part <= limit; ++part) {
        for (std::size_t total = part; total <= limit; ++total) {
          dp[total] += dp[total - part];
        }
      }
    }
    for (std::size_t n = 0; n <= limit; ++n) {
      CHECK(counts[n] == dp[n]);
    }
  }
  auto two = bellkit::colored_partitions(2, 5);
  CHECK(two == std::vector<Integer>{1, 2, 5, 10, 20, 36});
}

TEST_CASE("colored partition series agrees with the recurrence path") {
  auto series = bellkit::colored_partition_series(3, 40);
  auto direct = bellkit::coeffs_via_recurrence<Rational>(sigma_scaled(-3), 40);
  CHECK(series.values() == direct.values());
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(bellkit::cyclotomic(1) ==
        Polynomial({Rational(1), Rational(-1)}));  // documented sign choice
  CHECK(bellkit::cyclotomic(2) == Polynomial({Rational(1), Rational(1)}));
  CHECK(bellkit::cyclotomic(3) ==
        Polynomial({Rational(1), Rational(1), Rational(1)}));
  CHECK(bellkit::cyclotomic(4) ==
        Polynomial({Rational(1), Rational(0), Rational(1)}));
  CHECK(bellkit::cyclotomic(6) ==
        Polynomial({Rational(1), Rational(-1), Rational(1)}));
  CHECK(bellkit::cyclotomic(12) ==
        Polynomial({Rational(1), Rational(0), Rational(-1), Rational(0),
                    Rational(1)}));
  CHECK(bellkit::to_string(bellkit::cyclotomic(12)) == "x^4 - x^2 + 1");
  CHECK_THROWS_AS(bellkit::cyclotomic(0), std::domain_error);

  for (std::uint64_t q = 2; q <= 200; ++q) {
    Polynomial phi = bellkit::cyclotomic(q);
    CHECK(phi.degree() == bellkit::euler_phi(q).get_num().get_si());
    CHECK(phi.coeff(0) == Rational(1));
  }

  // 105 is the least index with a coefficient outside {-1, 0, 1}.
  Polynomial big = bellkit::cyclotomic(105);
  CHECK(big.coeff(7) == Rational(-2));
  CHECK(big.coeff(41) == Rational(-2));

  for (std::uint64_t n = 1; n <= 60; ++n) {
    Polynomial product(Rational(1));
    for (std::uint64_t d : bellkit::divisors(n)) {
      product *= bellkit::cyclotomic(d);
    }
    std::vector<Rational> expected(n + 1, Rational(0));
    expected[0] = Rational(1);
    expected[n] = Rational(-1);
    CHECK(product == Polynomial(expected));
  }
}

TEST_CASE("exponent hypothesis checks") {
  auto beta24 = bellkit::bell_exponents<Rational>(sigma_scaled(24), 60);
  CHECK(bellkit::check_exponent_hypothesis(beta24, 2));
  CHECK(bellkit::check_exponent_hypothesis(beta24, 3));
  CHECK_FALSE(bellkit::check_exponent_hypothesis(beta24, 5));

  // A p in any denominator disqualifies the sequence even at p | m:
  // integrality of the driver is not enough for the conclusion.
  BellExponentSequence<Rational> mixed({Rational(2), Rational(1, 2)});
  CHECK_FALSE(bellkit::check_exponent_hypothesis(mixed, 2));

  auto beta12 = bellkit::bell_exponents<Rational>(ramanujan_driver(12), 30);
  CHECK(beta12.at(1) == Rational(0));
  CHECK(beta12.at(2) == Rational(1));
  CHECK(beta12.at(3) == Rational(0));
  CHECK(beta12.at(4) == Rational(-1));
  CHECK(beta12.at(6) == Rational(-1));
  CHECK(beta12.at(12) == Rational(1));
  for (std::size_t m : {5, 7, 8, 9, 10, 11, 13, 24, 30}) {
    CHECK(beta12.at(m) == Rational(0));
  }
  CHECK(bellkit::check_vanishing_hypothesis(beta12, 2));
  CHECK_FALSE(bellkit::check_vanishing_hypothesis(beta12, 3));
}

TEST_CASE("verify_congruence on eta-power drivers") {
  for (std::uint64_t p : {2, 3}) {
    auto report = bellkit::verify_congruence(sigma_scaled(24), p, 200);
    CHECK(report.theorem == "congruence");
    CHECK(report.p == p);
    CHECK(report.limit == 200);
    CHECK(report.hypothesis_ok);
    CHECK(report.verdict);
    CHECK(report.violations.empty());
  }
  // 24 is not divisible by 5, so the precheck fails and nothing is scanned.
  auto failed = bellkit::verify_congruence(sigma_scaled(24), 5, 200);
  CHECK_FALSE(failed.hypothesis_ok);
  CHECK_FALSE(failed.verdict);
  CHECK(failed.violations.empty());

  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    auto colored = bellkit::verify_congruence(
        sigma_scaled(-static_cast<long>(p)), p, 150);
    CHECK(colored.hypothesis_ok);
    CHECK(colored.verdict);
  }

  CHECK_THROWS_AS(bellkit::verify_congruence(sigma_scaled(24), 4, 10),
                  std::domain_error);
  CHECK_THROWS_AS(bellkit::verify_congruence(sigma_scaled(24), 1, 10),
                  std::domain_error);
}

TEST_CASE("verify_vanishing on cyclotomic drivers") {
  auto good = bellkit::verify_vanishing(ramanujan_driver(12), 2, 80);
  CHECK(good.theorem == "vanishing");
  CHECK(good.hypothesis_ok);
  CHECK(good.verdict);
  CHECK(good.violations.empty());

  // q = 3, p = 2: the hypothesis fails and the scan still reports the
  // first odd-index coefficient of 1 + x + x^2.
  auto bad = bellkit::verify_vanishing(ramanujan_driver(3), 2, 30);
  CHECK_FALSE(bad.hypothesis_ok);
  CHECK_FALSE(bad.verdict);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0].index == 1);
  CHECK(bad.violations[0].residue == "1");

  // Rational coefficients render exactly.
  bellkit::Driver<Rational> constant_half = [](std::uint64_t) {
    return Rational(1, 2);
  };
  auto rational_report = bellkit::verify_vanishing(constant_half, 3, 4);
  CHECK_FALSE(rational_report.hypothesis_ok);
  CHECK_FALSE(rational_report.verdict);
  REQUIRE(!rational_report.violations.empty());
  CHECK(rational_report.violations[0].index == 1);
  CHECK(rational_report.violations[0].residue == "-1/2");

  CHECK_THROWS_AS(bellkit::verify_vanishing(ramanujan_driver(3), 6, 10),
                  std::domain_error);
}

TEST_CASE("report serialization is stable") {
  auto report = bellkit::verify_congruence(sigma_scaled(24), 2, 50);
  CHECK(bellkit::to_json(report) ==
        R"({"theorem":"congruence","p":2,"limit":50,"hypothesis_ok":true,)"
        R"("verdict":true,"violations":[]})");
  auto bad = bellkit::verify_vanishing(ramanujan_driver(3), 2, 30);
  CHECK(bellkit::to_json(bad) ==
        R"({"theorem":"vanishing","p":2,"limit":30,"hypothesis_ok":false,)"
        R"("verdict":false,"violations":[{"n":1,"residue":"1"}]})");
}

TEST_CASE("polynomials convert to coefficient sequences") {
  auto seq = bellkit::to_coefficient_sequence(bellkit::cyclotomic(12), 10);
  CHECK(seq.limit() == 10);
  CHECK(seq.at(0) == Rational(1));
  CHECK(seq.at(2) == Rational(-1));
  CHECK(seq.at(4) == Rational(1));
  for (std::size_t n : {1, 3, 5, 6, 7, 8, 9, 10}) {
    CHECK(seq.at(n) == Rational(0));
  }
  auto truncated = bellkit::to_coefficient_sequence(bellkit::cyclotomic(12), 2);
  CHECK(truncated.values() ==
        std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});
  CHECK_THROWS_AS(bellkit::to_coefficient_sequence(
                      Polynomial({Rational(2), Rational(1)}), 5),
                  std::invalid_argument);
}
