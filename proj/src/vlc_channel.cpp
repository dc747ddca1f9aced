// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfvlc/vlc_channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rfvlc {

namespace {
constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
}  // namespace

double lambertian_order(double semi_angle_half_power_deg) {
  if (!(semi_angle_half_power_deg > 0.0 && semi_angle_half_power_deg < 90.0)) {
    throw std::invalid_argument("lambertian_order: semi-angle must lie in (0, 90) degrees");
  }
  return -std::numbers::ln2 / std::log(std::cos(deg_to_rad(semi_angle_half_power_deg)));
}

double vlc_los_gain(const Pose3& tx, const Pose3& rx, const VlcParams& params) {
  const Vec3 link = rx.position - tx.position;
  const double d = norm(link);
  if (!(d > 0.0)) throw std::invalid_argument("vlc_los_gain: coincident transmitter and receiver");

  const double cos_irradiance = dot(tx.axis, link) / d;
  const double cos_incidence = -dot(rx.axis, link) / d;
  if (cos_irradiance < 0.0) return 0.0;

  const double fov = deg_to_rad(params.fov);
  if (std::acos(std::clamp(cos_incidence, -1.0, 1.0)) > fov) return 0.0;

  const double m = lambertian_order(params.semi_angle_half_power);
  const double n = params.concentrator_refractive_index;
  const double sin_fov = std::sin(fov);
  const double concentrator = n * n / (sin_fov * sin_fov);

  return (m + 1.0) * params.pd_area / (2.0 * std::numbers::pi * d * d) *
         std::pow(cos_irradiance, m) * params.optical_filter_gain * concentrator * cos_incidence;
}

double vlc_rx_electrical_power(double gain, double weather_factor, const VlcParams& params) {
  const double current = params.responsivity * params.optical_tx_power * gain * weather_factor;
  return current * current;
}

double vlc_noise_power(const VlcParams& params) { return params.noise_psd * params.bandwidth; }

}  // namespace rfvlc
