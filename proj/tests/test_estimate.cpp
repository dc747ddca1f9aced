#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rfvlc/estimate.hpp"

using namespace rfvlc;

TEST_CASE("wilson interval") {
  const auto [low, high] = confidence_interval(50, 100);
  CHECK(low == doctest::Approx(0.40383153).epsilon(1e-7));
  CHECK(high == doctest::Approx(0.59616847).epsilon(1e-7));

  CHECK(confidence_interval(0, 37).first == 0.0);
  CHECK(confidence_interval(0, 37).second > 0.0);
  CHECK(confidence_interval(37, 37).second == 1.0);
  CHECK(confidence_interval(37, 37).first < 1.0);

  CHECK_THROWS_AS(confidence_interval(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(confidence_interval(5, 4), std::invalid_argument);
}

TEST_CASE("wilson interval contains the point estimate") {
  std::mt19937_64 gen(8);
  for (int i = 0; i < 5000; ++i) {
    const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(1, 2000000)(gen);
    const std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(0, n)(gen);
    const auto e = proportion_estimate(k, n);
    CHECK(0.0 <= e.ci95_low);
    CHECK(e.ci95_low <= e.value);
    CHECK(e.value <= e.ci95_high);
    CHECK(e.ci95_high <= 1.0);
    CHECK(e.stderr_ >= 0.0);
    CHECK(e.n_trials == n);
  }
}

TEST_CASE("proportion estimate") {
  const auto all = proportion_estimate(1000, 1000);
  CHECK(all.value == 1.0);
  CHECK(all.stderr_ == 0.0);
  const auto half = proportion_estimate(500, 1000);
  CHECK(half.value == 0.5);
  CHECK(half.stderr_ == doctest::Approx(std::sqrt(0.25 / 1000.0)).epsilon(1e-14));
}

TEST_CASE("mean estimate") {
  const std::vector<double> x{1.0, 2.0, 3.0, 4.0};
  const auto e = mean_estimate(x);
  CHECK(e.value == 2.5);
  CHECK(e.stderr_ == doctest::Approx(std::sqrt((5.0 / 3.0) / 4.0)).epsilon(1e-14));
  CHECK(e.ci95_low == doctest::Approx(2.5 - 1.959963984540054 * e.stderr_));
  CHECK(e.ci95_high == doctest::Approx(2.5 + 1.959963984540054 * e.stderr_));
  CHECK(e.n_trials == 4);

  const std::vector<double> one{7.0};
  CHECK(mean_estimate(one).stderr_ == 0.0);
  CHECK_THROWS_AS(mean_estimate(std::vector<double>{}), std::invalid_argument);
}
