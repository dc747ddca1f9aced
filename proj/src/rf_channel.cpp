// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfvlc/rf_channel.hpp"

#include <cmath>
#include <stdexcept>

namespace rfvlc {

double rf_mean_rx_power(double distance, const RfParams& params) {
  if (!(distance > 0.0)) throw std::invalid_argument("rf_mean_rx_power: distance must be > 0");
  return params.tx_power * std::pow(10.0, -params.reference_loss_db / 10.0) *
         std::pow(distance / params.reference_distance, -params.path_loss_exponent);
}

double sample_fading(const RfParams& params, RandomStream& rng) {
  if (const auto* nak = std::get_if<NakagamiFading>(&params.fading)) {
    std::gamma_distribution<double> gamma(nak->m_shape, 1.0 / nak->m_shape);
    return gamma(rng);
  }
  std::exponential_distribution<double> exponential(1.0);
  return exponential(rng);
}

double rf_noise_power(const RfParams& params) {
  return params.noise_psd * params.bandwidth * std::pow(10.0, params.noise_figure_db / 10.0);
}

}  // namespace rfvlc
