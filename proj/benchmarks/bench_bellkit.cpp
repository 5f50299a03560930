#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "bellkit/arithfn.hpp"
#include "bellkit/bell.hpp"
#include "bellkit/congruence.hpp"
#include "bellkit/power_series.hpp"
#include "bellkit/rational.hpp"

using bellkit::Rational;

namespace {

bellkit::Driver<Rational> sigma_driver() {
  return [](std::uint64_t n) { return bellkit::sigma(1, n); };
}

void bench_coeffs_recurrence(benchmark::State& state) {
  auto g = sigma_driver();
  auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bellkit::coeffs_via_recurrence<Rational>(g, order));
  }
}
BENCHMARK(bench_coeffs_recurrence)->Arg(50)->Arg(100)->Arg(200);

void bench_coeffs_bell_poly(benchmark::State& state) {
  auto g = sigma_driver();
  auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bellkit::coeffs_via_bell_poly<Rational>(g, order));
  }
}
BENCHMARK(bench_coeffs_bell_poly)->Arg(50)->Arg(100);

void bench_coeffs_product(benchmark::State& state) {
  auto g = sigma_driver();
  auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bellkit::coeffs_via_product<Rational>(g, order));
  }
}
BENCHMARK(bench_coeffs_product)->Arg(50)->Arg(100)->Arg(200);

void bench_euler_product_partitions(benchmark::State& state) {
  auto order = static_cast<std::size_t>(state.range(0));
  std::vector<Rational> beta(order, Rational(-1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bellkit::euler_product(beta, order));
  }
}
BENCHMARK(bench_euler_product_partitions)->Arg(100)->Arg(300)->Arg(500);

void bench_series_exp(benchmark::State& state) {
  auto order = static_cast<std::size_t>(state.range(0));
  std::vector<Rational> coeffs(order + 1);
  for (std::size_t n = 1; n <= order; ++n) {
    coeffs[n] = Rational(-1, static_cast<unsigned long>(n));
  }
  auto series = bellkit::PowerSeries<Rational>::from_coeffs(coeffs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bellkit::exp(series));
  }
}
BENCHMARK(bench_series_exp)->Arg(100)->Arg(300);

void bench_series_log(benchmark::State& state) {
  auto order = static_cast<std::size_t>(state.range(0));
  std::vector<Rational> beta(order, Rational(-1));
  auto series = bellkit::euler_product(beta, order);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bellkit::log(series));
  }
}
BENCHMARK(bench_series_log)->Arg(100)->Arg(300);

void bench_tau(benchmark::State& state) {
  auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bellkit::tau(count));
  }
}
BENCHMARK(bench_tau)->Arg(100)->Arg(500)->Arg(1000);

void bench_verify_congruence(benchmark::State& state) {
  auto limit = static_cast<std::size_t>(state.range(0));
  bellkit::Driver<Rational> colored = [](std::uint64_t n) {
    Rational s = bellkit::sigma(1, n);
    s *= 5;
    return Rational(-s);
  };
  for (auto _ : state) {
    benchmark::DoNotOptimize(bellkit::verify_congruence(colored, 5, limit));
  }
}
BENCHMARK(bench_verify_congruence)->Arg(100)->Arg(300);

void bench_cyclotomic(benchmark::State& state) {
  auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bellkit::cyclotomic(q));
  }
}
BENCHMARK(bench_cyclotomic)->Arg(105)->Arg(210)->Arg(300);

}  // namespace

BENCHMARK_MAIN();
