// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rfvlc/geometry.hpp"
#include "rfvlc/rf_channel.hpp"
#include "rfvlc/vlc_channel.hpp"

namespace rfvlc {

enum class WeatherKind { clear, rain, fog, dry_snow };

std::string_view to_string(WeatherKind kind);
/// Accepts "clear", "rain", "fog", "dry_snow"; throws std::invalid_argument otherwise.
WeatherKind weather_kind_from_string(std::string_view name);

/// Optical weather state. The descriptor is rain rate (mm/hr) for rain,
/// visibility (km) for fog, snow rate (mm/hr) for dry snow and empty for
/// clear sky.
struct WeatherCondition {
  WeatherKind kind = WeatherKind::clear;
  std::optional<double> descriptor;
  double attenuation_db_per_km = 0.0;

  static WeatherCondition clear();
  static WeatherCondition rain();      // 90 mm/hr, 21.9 dB/km
  static WeatherCondition fog();       // V = 0.05 km, 78.8 dB/km
  static WeatherCondition dry_snow();  // 10 mm/hr, 131 dB/km
  static WeatherCondition preset(WeatherKind kind);

  friend bool operator==(const WeatherCondition&, const WeatherCondition&) = default;
};

/// Two straight lanes crossing at (lane_x_offset, lane_y_offset): the
/// desired vehicle's lane runs along x, the perpendicular lane along y.
struct LaneGeometry {
  double lane_half_length = 500.0;
  double lane_x_offset = 0.0;
  double lane_y_offset = 0.0;
  Pose3 rsu_pose{{0.0, 0.0, 5.0}, {0.70710678118654752, 0.0, -0.70710678118654752}};
  double tx_height = 0.75;
  double exclusion_radius = 1.0;

  friend bool operator==(const LaneGeometry&, const LaneGeometry&) = default;
};

/// One experiment point. Defaults are the calibrated intersection
/// scenario (see docs/calibration.md).
struct ScenarioConfig {
  LaneGeometry geometry;
  WeatherCondition weather;
  double lambda_density = 0.01;  // vehicles per meter
  double rho_access = 0.01;
  double rho_a = 0.9;
  double beta_ov = 0.8;
  double distance_r = 50.0;      // m, along the lane from the crossing point
  double payload_h = 50.0 * 1024.0;  // bytes
  VlcParams vlc;
  RfParams rf;
  double sinr_threshold_vlc_db = -25.0;
  double sinr_threshold_rf_db = 5.0;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

struct Violation {
  std::string field;
  std::string message;
};

/// Every violated invariant, each tagged with its dotted field name.
/// An empty result means the configuration is usable.
std::vector<Violation> validate(const ScenarioConfig& config);

/// Throws std::invalid_argument listing all violations, if any.
void require_valid(const ScenarioConfig& config);

/// 10^(-c * d_km / 10). Throws std::invalid_argument on negative input.
double attenuation_factor(double attenuation_db_per_km, double distance_m);

enum class Lane { same, perpendicular };

struct Interferer {
  Pose3 pose;
  Lane lane = Lane::same;
};

struct InterfererSet {
  std::vector<Interferer> members;

  std::size_t count(Lane lane) const;
};

/// Desired transmitter: on the x lane at distance_r from the crossing,
/// headlamp pointing back toward the crossing.
Pose3 desired_vehicle_pose(const ScenarioConfig& config);

/// One deployment of transmit-active interferers. Each lane carries an
/// independent 1-D Poisson process of intensity lambda * rho on
/// [-L, L]; points closer than the exclusion radius to the desired
/// vehicle are dropped. Every vehicle faces the crossing.
InterfererSet sample_interferers(const ScenarioConfig& config, RandomStream& rng);

}  // namespace rfvlc
