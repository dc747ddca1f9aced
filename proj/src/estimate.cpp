// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfvlc/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rfvlc {

namespace {
constexpr double kZ95 = 1.959963984540054;
}

std::pair<double, double> confidence_interval(std::uint64_t successes, std::uint64_t n) {
  if (n == 0 || successes > n) throw std::invalid_argument("confidence_interval: need 0 <= k <= n, n >= 1");
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half = kZ95 * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  // Rounding can push the bounds a hair past p at the extremes.
  double low = successes == 0 ? 0.0 : std::clamp(center - half, 0.0, p);
  double high = successes == n ? 1.0 : std::clamp(center + half, p, 1.0);
  return {low, high};
}

MetricEstimate proportion_estimate(std::uint64_t successes, std::uint64_t n) {
  const auto [low, high] = confidence_interval(successes, n);
  const double p = static_cast<double>(successes) / static_cast<double>(n);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n, low, high};
}

MetricEstimate mean_estimate(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("mean_estimate: no samples");
  const double n = static_cast<double>(samples.size());
  double sum = 0.0;
  for (double s : samples) sum += s;
  const double mean = sum / n;
  double ss = 0.0;
  for (double s : samples) ss += (s - mean) * (s - mean);
  const double variance = samples.size() > 1 ? ss / (n - 1.0) : 0.0;
  const double se = std::sqrt(variance / n);
  return {mean, se, samples.size(), mean - kZ95 * se, mean + kZ95 * se};
}

}  // namespace rfvlc
