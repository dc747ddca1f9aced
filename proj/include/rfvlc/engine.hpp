// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "rfvlc/estimate.hpp"
#include "rfvlc/metrics.hpp"
#include "rfvlc/scenario.hpp"

namespace rfvlc {

enum class SweepVariable { distance_r, t_th };
enum class Metric { prp, dor, rate };

std::string_view to_string(Metric metric);

/// A sweep over link distance or over delay threshold.
///
/// For a distance sweep `values` are distances in meters and DOR rows use
/// `t_th`. For a threshold sweep `values` are thresholds in seconds and
/// every value is evaluated at each entry of `distances`.
struct SweepSpec {
  SweepVariable variable = SweepVariable::distance_r;
  std::vector<double> values;
  std::vector<double> distances;
  std::vector<WeatherCondition> weathers{WeatherCondition::clear()};
  std::vector<Mode> modes{Mode::pure_vlc, Mode::pure_rf, Mode::la};
  std::vector<Metric> metrics{Metric::prp};
  std::uint64_t n_trials = 100000;
  std::uint64_t master_seed = 1;
  double t_th = 3e-3;
};

std::vector<Violation> validate(const SweepSpec& spec);

struct SweepRow {
  double distance_m = 0.0;
  double t_th_s = 0.0;
  WeatherCondition weather;
  Mode mode = Mode::la;
  Metric metric = Metric::prp;
  MetricEstimate estimate;
};

/// Rows in cartesian order. Distance sweeps: value, weather, mode,
/// metric. Threshold sweeps: distance, value, weather, mode, metric.
struct SweepTable {
  SweepVariable variable = SweepVariable::distance_r;
  std::vector<SweepRow> rows;
};

/// Per-trial stream seed.
///
///   key  = (point_index << 40) | trial_index
///   seed = mix(mix(master_seed) ^ key)
///   mix(z): z += 0x9e3779b97f4a7c15;
///           z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9;
///           z = (z ^ (z >> 27)) * 0x94d049bb133111eb;
///           return z ^ (z >> 31);
///
/// mix is a bijection on 64-bit words, so distinct (point, trial) pairs
/// map to distinct seeds for a fixed master seed. Requires
/// point_index < 2^24 and trial_index < 2^40 (std::out_of_range otherwise).
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t point_index,
                          std::uint64_t trial_index);

/// Runs trials 0..n_trials-1 of one sweep point. Trial j draws from
/// RandomStream(derive_seed(master_seed, point_index, j)), so the result
/// does not depend on `workers` (0 selects hardware concurrency).
std::vector<TrialOutcome> simulate_point(const ScenarioConfig& config, std::uint64_t point_index,
                                         std::uint64_t master_seed, std::uint64_t n_trials,
                                         unsigned workers = 0);

/// Called once per simulated (point, weather) with the raw outcomes.
using TrialObserver = std::function<void(std::uint64_t point_index, double distance_m,
                                         const WeatherCondition& weather,
                                         std::span<const TrialOutcome> outcomes)>;

/// Validates both inputs, then evaluates every requested metric. Each
/// point index (distance) is simulated once per weather; all modes,
/// metrics and thresholds share those trials, and every weather reuses
/// the same seeds.
SweepTable run_sweep(const ScenarioConfig& config, const SweepSpec& spec, unsigned workers = 0,
                     const TrialObserver& observer = {});

}  // namespace rfvlc
