// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>
#include <variant>

namespace rfvlc {

using RandomStream = std::mt19937_64;

struct RayleighFading {
  friend bool operator==(RayleighFading, RayleighFading) = default;
};

struct NakagamiFading {
  double m_shape = 1.0;
  friend bool operator==(NakagamiFading, NakagamiFading) = default;
};

using FadingModel = std::variant<RayleighFading, NakagamiFading>;

struct RfParams {
  double tx_power = 0.02;           // W
  double path_loss_exponent = 2.0;
  double reference_distance = 1.0;  // m
  double reference_loss_db = 47.0;
  FadingModel fading = RayleighFading{};
  double noise_psd = 4e-21;         // W/Hz
  double noise_figure_db = 9.0;
  double bandwidth = 20e6;          // Hz

  friend bool operator==(const RfParams&, const RfParams&) = default;
};

/// Log-distance mean received power. Throws std::invalid_argument for
/// distance <= 0.
double rf_mean_rx_power(double distance, const RfParams& params);

/// Unit-mean small-scale power gain: Exp(1) for Rayleigh, Gamma(m, 1/m)
/// for Nakagami-m.
double sample_fading(const RfParams& params, RandomStream& rng);

/// noise_psd * bandwidth * noise figure.
double rf_noise_power(const RfParams& params);

}  // namespace rfvlc
