// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rfvlc/geometry.hpp"

namespace rfvlc {

/// Headlamp emitter and photodiode receiver parameters of the IM/DD link.
/// Angles are in degrees.
struct VlcParams {
  double optical_tx_power = 1.0;              // W
  double semi_angle_half_power = 30.0;        // deg
  double pd_area = 1e-4;                      // m^2
  double fov = 60.0;                          // deg, half-angle
  double optical_filter_gain = 1.0;
  double concentrator_refractive_index = 1.5;
  double responsivity = 0.54;                 // A/W
  double noise_psd = 1e-21;                   // A^2/Hz
  double bandwidth = 20e6;                    // Hz

  friend bool operator==(const VlcParams&, const VlcParams&) = default;
};

/// Lambertian emission order m = -ln 2 / ln cos(semi-angle).
/// Throws std::invalid_argument unless 0 < semi-angle < 90 degrees.
double lambertian_order(double semi_angle_half_power_deg);

/// Line-of-sight DC gain from `tx` to `rx`.
///
/// Zero when the receiver sits outside the photodiode field of view or
/// behind the emitter. The concentrator gain n^2 / sin^2(fov) applies
/// inside the field of view. Throws std::invalid_argument for coincident
/// positions.
double vlc_los_gain(const Pose3& tx, const Pose3& rx, const VlcParams& params);

/// Electrical signal power after square-law detection:
/// (responsivity * optical power * gain * weather factor)^2.
double vlc_rx_electrical_power(double gain, double weather_factor, const VlcParams& params);

/// Lumped receiver noise: noise_psd * bandwidth.
double vlc_noise_power(const VlcParams& params);

}  // namespace rfvlc
