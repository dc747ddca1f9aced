// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace rfvlc {

/// Monte Carlo point estimate with its 95% interval.
struct MetricEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
  std::uint64_t n_trials = 0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;

  friend bool operator==(const MetricEstimate&, const MetricEstimate&) = default;
};

/// Wilson score interval at 95% for `successes` out of `n`.
std::pair<double, double> confidence_interval(std::uint64_t successes, std::uint64_t n);

/// Proportion estimate: stderr sqrt(p(1-p)/n), Wilson interval.
MetricEstimate proportion_estimate(std::uint64_t successes, std::uint64_t n);

/// Sample mean with normal-approximation interval (1.96 stderr).
MetricEstimate mean_estimate(std::span<const double> samples);

}  // namespace rfvlc
