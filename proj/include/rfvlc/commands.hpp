// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rfvlc/config.hpp"
#include "rfvlc/engine.hpp"

namespace rfvlc {

std::string tool_version();

/// Everything that determines one CLI run. Written to `run.manifest`.
struct RunManifest {
  std::string config_path;
  std::string subcommand;
  std::filesystem::path output_dir = ".";
  std::optional<std::uint64_t> seed_override;
  std::optional<std::uint64_t> trials_override;
  std::optional<std::vector<WeatherCondition>> weathers_override;
  std::optional<std::vector<Mode>> modes_override;
  bool gnuplot = false;
  bool dump_trials = false;
  unsigned workers = 0;
  std::string timestamp;
  std::string tool_version = rfvlc::tool_version();
};

inline constexpr const char* kPrpHeader =
    "distance_m,weather,mode,prp,stderr,ci95_low,ci95_high,n_trials";
inline constexpr const char* kDorHeader =
    "t_th_ms,distance_m,weather,mode,dor,stderr,ci95_low,ci95_high,n_trials";
inline constexpr const char* kRateHeader =
    "distance_m,weather,mode,rate_mbps,stderr,ci95_low,ci95_high,n_trials";

/// Applies the manifest's overrides to a parsed configuration.
ExperimentConfig apply_overrides(ExperimentConfig config, const RunManifest& manifest);

/// Each command writes its CSV (plus run.manifest, and optional gnuplot
/// and per-trial files) into manifest.output_dir and returns the CSV
/// path. On any failure the files it created are removed and the
/// exception propagates.
std::filesystem::path cmd_prp_sweep(const RunManifest& manifest, const ExperimentConfig& config);
std::filesystem::path cmd_dor_sweep(const RunManifest& manifest, const ExperimentConfig& config);
std::filesystem::path cmd_rate_sweep(const RunManifest& manifest, const ExperimentConfig& config);

/// CSV text of a table in the layout of the matching command.
std::string format_prp_csv(const SweepTable& table);
std::string format_dor_csv(const SweepTable& table);
std::string format_rate_csv(const SweepTable& table);

/// 9 significant digits, the fixed precision of every CSV number.
std::string format_number(double value);

}  // namespace rfvlc
