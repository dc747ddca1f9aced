// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfvlc/scenario.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rfvlc {

Vec3 normalized(Vec3 v) {
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite vector");
  }
  return (1.0 / n) * v;
}

std::string_view to_string(WeatherKind kind) {
  switch (kind) {
    case WeatherKind::clear: return "clear";
    case WeatherKind::rain: return "rain";
    case WeatherKind::fog: return "fog";
    case WeatherKind::dry_snow: return "dry_snow";
  }
  return "unknown";
}

WeatherKind weather_kind_from_string(std::string_view name) {
  for (auto kind : {WeatherKind::clear, WeatherKind::rain, WeatherKind::fog, WeatherKind::dry_snow}) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown weather '" + std::string(name) + "'");
}

WeatherCondition WeatherCondition::clear() { return {WeatherKind::clear, std::nullopt, 0.0}; }
WeatherCondition WeatherCondition::rain() { return {WeatherKind::rain, 90.0, 21.9}; }
WeatherCondition WeatherCondition::fog() { return {WeatherKind::fog, 0.05, 78.8}; }
WeatherCondition WeatherCondition::dry_snow() { return {WeatherKind::dry_snow, 10.0, 131.0}; }

WeatherCondition WeatherCondition::preset(WeatherKind kind) {
  switch (kind) {
    case WeatherKind::clear: return clear();
    case WeatherKind::rain: return rain();
    case WeatherKind::fog: return fog();
    case WeatherKind::dry_snow: return dry_snow();
  }
  throw std::invalid_argument("unknown weather kind");
}

double attenuation_factor(double attenuation_db_per_km, double distance_m) {
  if (attenuation_db_per_km < 0.0 || distance_m < 0.0 || std::isnan(attenuation_db_per_km) ||
      std::isnan(distance_m)) {
    throw std::invalid_argument("attenuation_factor: inputs must be nonnegative");
  }
  return std::pow(10.0, -attenuation_db_per_km * (distance_m / 1000.0) / 10.0);
}

namespace {

class ViolationList {
 public:
  void check(bool ok, std::string_view field, std::string_view message) {
    if (!ok) items_.push_back({std::string(field), std::string(message)});
  }
  std::vector<Violation> take() { return std::move(items_); }

 private:
  std::vector<Violation> items_;
};

bool finite(double v) { return std::isfinite(v); }

}  // namespace

std::vector<Violation> validate(const ScenarioConfig& c) {
  ViolationList out;

  const auto& g = c.geometry;
  out.check(g.lane_half_length > 0.0 && finite(g.lane_half_length), "geometry.lane_half_length",
            "must be > 0");
  out.check(finite(g.lane_x_offset), "geometry.lane_x_offset", "must be finite");
  out.check(finite(g.lane_y_offset), "geometry.lane_y_offset", "must be finite");
  out.check(g.tx_height > 0.0 && finite(g.tx_height), "geometry.tx_height", "must be > 0");
  const Vec3 rsu = g.rsu_pose.position;
  out.check(finite(rsu.x) && finite(rsu.y) && finite(rsu.z), "geometry.rsu_position", "must be finite");
  out.check(rsu.z >= 0.0, "geometry.rsu_position", "z must be >= 0");
  out.check(std::abs(norm(g.rsu_pose.axis) - 1.0) <= 1e-9, "geometry.rsu_normal",
            "must have unit norm");
  out.check(rsu.z > g.tx_height, "geometry.rsu_position",
            "RSU must be mounted above the headlamp height");
  out.check(g.exclusion_radius >= 0.0 && finite(g.exclusion_radius), "geometry.exclusion_radius",
            "must be >= 0");

  const auto& w = c.weather;
  out.check(w.attenuation_db_per_km >= 0.0 && finite(w.attenuation_db_per_km),
            "weather.attenuation_db_per_km", "must be >= 0");
  out.check(w.kind != WeatherKind::clear || w.attenuation_db_per_km == 0.0,
            "weather.attenuation_db_per_km", "clear weather has zero attenuation");

  out.check(c.lambda_density >= 0.0 && finite(c.lambda_density), "lambda_density", "must be >= 0");
  out.check(c.rho_access >= 0.0 && c.rho_access <= 1.0, "rho_access", "must lie in [0, 1]");
  out.check(c.rho_a > 0.0 && c.rho_a <= 1.0, "rho_a", "must lie in (0, 1]");
  out.check(c.beta_ov > 0.0 && c.beta_ov <= 1.0, "beta_ov", "must lie in (0, 1]");
  out.check(c.distance_r > 0.0 && finite(c.distance_r), "distance_r", "must be > 0");
  out.check(c.payload_h > 0.0 && finite(c.payload_h), "payload_h", "must be > 0");
  out.check(finite(c.sinr_threshold_vlc_db), "sinr_threshold_vlc_db", "must be finite");
  out.check(finite(c.sinr_threshold_rf_db), "sinr_threshold_rf_db", "must be finite");

  const auto& v = c.vlc;
  out.check(v.optical_tx_power > 0.0, "vlc.optical_tx_power", "must be > 0");
  out.check(v.semi_angle_half_power > 0.0 && v.semi_angle_half_power < 90.0,
            "vlc.semi_angle_half_power", "must lie in (0, 90) degrees");
  out.check(v.pd_area > 0.0, "vlc.pd_area", "must be > 0");
  out.check(v.fov > 0.0 && v.fov <= 90.0, "vlc.fov", "must lie in (0, 90] degrees");
  out.check(v.optical_filter_gain > 0.0, "vlc.optical_filter_gain", "must be > 0");
  out.check(v.concentrator_refractive_index > 0.0, "vlc.concentrator_refractive_index",
            "must be > 0");
  out.check(v.responsivity > 0.0, "vlc.responsivity", "must be > 0");
  out.check(v.noise_psd > 0.0, "vlc.noise_psd", "must be > 0");
  out.check(v.bandwidth > 0.0, "vlc.bandwidth", "must be > 0");

  const auto& r = c.rf;
  out.check(r.tx_power > 0.0, "rf.tx_power", "must be > 0");
  out.check(r.path_loss_exponent >= 2.0, "rf.path_loss_exponent", "must be >= 2");
  out.check(r.reference_distance > 0.0, "rf.reference_distance", "must be > 0");
  out.check(finite(r.reference_loss_db), "rf.reference_loss_db", "must be finite");
  if (const auto* nak = std::get_if<NakagamiFading>(&r.fading)) {
    out.check(nak->m_shape >= 0.5, "rf.nakagami_m", "must be >= 0.5");
  }
  out.check(r.noise_psd > 0.0, "rf.noise_psd", "must be > 0");
  out.check(finite(r.noise_figure_db), "rf.noise_figure_db", "must be finite");
  out.check(r.bandwidth > 0.0, "rf.bandwidth", "must be > 0");

  return out.take();
}

void require_valid(const ScenarioConfig& config) {
  const auto violations = validate(config);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid scenario:";
  for (const auto& v : violations) msg << ' ' << v.field << " (" << v.message << ");";
  throw std::invalid_argument(msg.str());
}

std::size_t InterfererSet::count(Lane lane) const {
  std::size_t n = 0;
  for (const auto& m : members) n += (m.lane == lane);
  return n;
}

Pose3 desired_vehicle_pose(const ScenarioConfig& config) {
  const auto& g = config.geometry;
  return {{g.lane_x_offset + config.distance_r, g.lane_y_offset, g.tx_height}, {-1.0, 0.0, 0.0}};
}

InterfererSet sample_interferers(const ScenarioConfig& config, RandomStream& rng) {
  const auto& g = config.geometry;
  const double half = g.lane_half_length;
  const double mean_per_lane = config.lambda_density * config.rho_access * 2.0 * half;

  InterfererSet set;
  if (mean_per_lane <= 0.0) return set;

  const Vec3 desired = desired_vehicle_pose(config).position;
  std::poisson_distribution<std::uint64_t> count_dist(mean_per_lane);
  std::uniform_real_distribution<double> along(-half, half);

  for (Lane lane : {Lane::same, Lane::perpendicular}) {
    const auto n = count_dist(rng);
    for (std::uint64_t i = 0; i < n; ++i) {
      const double u = along(rng);
      const double toward = u >= 0.0 ? -1.0 : 1.0;
      Pose3 pose;
      if (lane == Lane::same) {
        pose = {{g.lane_x_offset + u, g.lane_y_offset, g.tx_height}, {toward, 0.0, 0.0}};
      } else {
        pose = {{g.lane_x_offset, g.lane_y_offset + u, g.tx_height}, {0.0, toward, 0.0}};
      }
      if (norm(pose.position - desired) < g.exclusion_radius) continue;
      set.members.push_back({pose, lane});
    }
  }
  return set;
}

}  // namespace rfvlc
