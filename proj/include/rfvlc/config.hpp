// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rfvlc/engine.hpp"
#include "rfvlc/scenario.hpp"

namespace rfvlc {

/// Sweep axes and trial budgets shared by the three experiments.
struct SweepSettings {
  std::vector<double> prp_distances;      // m
  std::vector<double> rate_distances;     // m
  std::vector<double> dor_thresholds_ms;
  std::vector<double> dor_distances;      // m
  std::vector<WeatherCondition> weathers;
  std::optional<std::vector<Mode>> modes;
  std::optional<std::uint64_t> n_trials;  // per point; unset means per-experiment default
  std::uint64_t seed = 20221;

  SweepSettings();
  friend bool operator==(const SweepSettings&, const SweepSettings&) = default;
};

struct ExperimentConfig {
  ScenarioConfig scenario;
  SweepSettings sweep;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, std::vector<Violation> violations = {});
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Parses a `key = value` document (`#` starts a comment, dotted keys
/// address nested parameters, lists are comma separated). Missing keys
/// keep their defaults; unknown or repeated keys and malformed values
/// are reported with their line number. The result is validated and
/// domain violations are raised with their field names.
ExperimentConfig parse_config(std::string_view text);

/// Reads and parses a file; an empty path yields the defaults.
ExperimentConfig load_config(const std::string& path);

/// Canonical document listing every key; parse_config(to_config_text(c)) == c.
std::string to_config_text(const ExperimentConfig& config);

/// FNV-1a 64 of the canonical text, as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);

/// Default trial counts: PRP and rate sweeps 1e5, DOR sweeps 1e6.
inline constexpr std::uint64_t kDefaultSweepTrials = 100000;
inline constexpr std::uint64_t kDefaultDorTrials = 1000000;

SweepSpec make_prp_spec(const ExperimentConfig& config);
SweepSpec make_dor_spec(const ExperimentConfig& config);
SweepSpec make_rate_spec(const ExperimentConfig& config);

}  // namespace rfvlc
