// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>

#include "rfvlc/estimate.hpp"
#include "rfvlc/scenario.hpp"

namespace rfvlc {

/// SINRs of one coupled draw; both links see the same interferer set.
struct TrialOutcome {
  double sinr_vlc = 0.0;
  double sinr_rf = 0.0;
  std::size_t n_interferers_same = 0;
  std::size_t n_interferers_perp = 0;

  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

enum class Mode { pure_vlc, pure_rf, la, non_la };

std::string_view to_string(Mode mode);
Mode mode_from_string(std::string_view name);

/// Raised by closed-form oracles asked about a model they do not cover.
class UnsupportedModel : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double sinr(double signal, double interference_sum, double noise);

/// Straight-line distance between the desired transmitter and the RSU.
double desired_link_distance(const ScenarioConfig& config);

/// Draws one interferer deployment and one set of RF fading gains.
///
/// Draw order on `rng`: interferer deployment, then the desired link's
/// fading, then one fading gain per interferer in deployment order. The
/// weather only enters through deterministic VLC attenuation, so two
/// calls that differ only in `config.weather` consume identical random
/// numbers and return identical `sinr_rf`.
TrialOutcome run_trial(const ScenarioConfig& config, RandomStream& rng);

/// Reception event of one trial. Thresholds are linear SINR values.
/// `la` and `non_la` succeed when either link decodes.
bool success(const TrialOutcome& outcome, Mode mode, double theta_vlc, double theta_rf);

MetricEstimate prp(std::span<const TrialOutcome> outcomes, Mode mode, double theta_vlc,
                   double theta_rf);

/// Shannon rates scaled by the access probability; the aggregated mode
/// additionally pays the aggregation overhead beta_ov on the summed rate.
double instantaneous_rate(const TrialOutcome& outcome, Mode mode, const ScenarioConfig& config);

/// 8 * payload_h / rate, +infinity for a zero rate.
double minimum_transmission_time(double rate_bps, double payload_bytes);

/// Fraction of trials whose minimum transmission time exceeds `t_th` seconds.
MetricEstimate dor(std::span<const TrialOutcome> outcomes, Mode mode,
                   const ScenarioConfig& config, double t_th);

/// Mean instantaneous rate in bit/s.
MetricEstimate mean_rate(std::span<const TrialOutcome> outcomes, Mode mode,
                         const ScenarioConfig& config);

/// exp(-theta * N / P(d)): exact RF reception probability under Rayleigh
/// fading without interference. `distance` is the straight-line link
/// length. Throws UnsupportedModel for other fading families.
double prp_rf_closed_form_no_interference(double distance, const RfParams& rf, double theta);

/// Deterministic VLC SNR of the desired link at config.distance_r with no
/// interferers, including weather loss.
double vlc_snr_no_interference(const ScenarioConfig& config);

/// 1 when the interference-free VLC SNR reaches the VLC threshold, else 0.
int prp_vlc_no_interference(const ScenarioConfig& config);

/// Distance at which the interference-free VLC SNR crosses the VLC
/// threshold, located by bisection on [lo, hi] to `tolerance` meters.
/// Empty when the SNR does not change sides over the bracket.
std::optional<double> vlc_cutoff_distance(const ScenarioConfig& config, double lo, double hi,
                                          double tolerance = 1e-6);

}  // namespace rfvlc
