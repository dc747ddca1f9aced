// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfvlc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace rfvlc {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::pure_vlc: return "pure_vlc";
    case Mode::pure_rf: return "pure_rf";
    case Mode::la: return "la";
    case Mode::non_la: return "non_la";
  }
  return "unknown";
}

Mode mode_from_string(std::string_view name) {
  for (auto mode : {Mode::pure_vlc, Mode::pure_rf, Mode::la, Mode::non_la}) {
    if (to_string(mode) == name) return mode;
  }
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

double sinr(double signal, double interference_sum, double noise) {
  if (!(noise > 0.0)) throw std::invalid_argument("sinr: noise power must be > 0");
  return signal / (interference_sum + noise);
}

double desired_link_distance(const ScenarioConfig& config) {
  return norm(config.geometry.rsu_pose.position - desired_vehicle_pose(config).position);
}

namespace {

// Electrical VLC power reaching the RSU photodiode from `tx`.
double vlc_power_at_rsu(const Pose3& tx, const ScenarioConfig& config) {
  const Pose3& rx = config.geometry.rsu_pose;
  const double gain = vlc_los_gain(tx, rx, config.vlc);
  if (gain == 0.0) return 0.0;
  const double d = norm(rx.position - tx.position);
  const double weather = attenuation_factor(config.weather.attenuation_db_per_km, d);
  return vlc_rx_electrical_power(gain, weather, config.vlc);
}

}  // namespace

TrialOutcome run_trial(const ScenarioConfig& config, RandomStream& rng) {
  require_valid(config);

  const Pose3 desired = desired_vehicle_pose(config);
  const Vec3 rsu = config.geometry.rsu_pose.position;
  const InterfererSet interferers = sample_interferers(config, rng);

  const double rf_signal =
      rf_mean_rx_power(norm(rsu - desired.position), config.rf) * sample_fading(config.rf, rng);

  double vlc_interference = 0.0;
  double rf_interference = 0.0;
  for (const auto& member : interferers.members) {
    vlc_interference += vlc_power_at_rsu(member.pose, config);
    rf_interference +=
        rf_mean_rx_power(norm(rsu - member.pose.position), config.rf) * sample_fading(config.rf, rng);
  }

  TrialOutcome out;
  out.sinr_vlc = sinr(vlc_power_at_rsu(desired, config), vlc_interference, vlc_noise_power(config.vlc));
  out.sinr_rf = sinr(rf_signal, rf_interference, rf_noise_power(config.rf));
  out.n_interferers_same = interferers.count(Lane::same);
  out.n_interferers_perp = interferers.count(Lane::perpendicular);
  return out;
}

bool success(const TrialOutcome& outcome, Mode mode, double theta_vlc, double theta_rf) {
  const bool vlc_ok = outcome.sinr_vlc >= theta_vlc;
  const bool rf_ok = outcome.sinr_rf >= theta_rf;
  switch (mode) {
    case Mode::pure_vlc: return vlc_ok;
    case Mode::pure_rf: return rf_ok;
    case Mode::la:
    case Mode::non_la: return vlc_ok || rf_ok;
  }
  return false;
}

MetricEstimate prp(std::span<const TrialOutcome> outcomes, Mode mode, double theta_vlc,
                   double theta_rf) {
  if (outcomes.empty()) throw std::invalid_argument("prp: no outcomes");
  const auto hits = std::count_if(outcomes.begin(), outcomes.end(), [&](const TrialOutcome& o) {
    return success(o, mode, theta_vlc, theta_rf);
  });
  return proportion_estimate(static_cast<std::uint64_t>(hits), outcomes.size());
}

double instantaneous_rate(const TrialOutcome& outcome, Mode mode, const ScenarioConfig& config) {
  const double r_vlc = config.vlc.bandwidth * std::log2(1.0 + outcome.sinr_vlc);
  const double r_rf = config.rf.bandwidth * std::log2(1.0 + outcome.sinr_rf);
  switch (mode) {
    case Mode::pure_vlc: return config.rho_a * r_vlc;
    case Mode::pure_rf: return config.rho_a * r_rf;
    case Mode::non_la: return config.rho_a * std::max(r_vlc, r_rf);
    case Mode::la: return config.beta_ov * config.rho_a * (r_vlc + r_rf);
  }
  return 0.0;
}

double minimum_transmission_time(double rate_bps, double payload_bytes) {
  if (rate_bps <= 0.0) return std::numeric_limits<double>::infinity();
  return 8.0 * payload_bytes / rate_bps;
}

MetricEstimate dor(std::span<const TrialOutcome> outcomes, Mode mode, const ScenarioConfig& config,
                   double t_th) {
  if (outcomes.empty()) throw std::invalid_argument("dor: no outcomes");
  if (!(t_th > 0.0)) throw std::invalid_argument("dor: t_th must be > 0");
  std::uint64_t late = 0;
  for (const auto& o : outcomes) {
    late += minimum_transmission_time(instantaneous_rate(o, mode, config), config.payload_h) > t_th;
  }
  return proportion_estimate(late, outcomes.size());
}

MetricEstimate mean_rate(std::span<const TrialOutcome> outcomes, Mode mode,
                         const ScenarioConfig& config) {
  std::vector<double> rates;
  rates.reserve(outcomes.size());
  for (const auto& o : outcomes) rates.push_back(instantaneous_rate(o, mode, config));
  return mean_estimate(rates);
}

double prp_rf_closed_form_no_interference(double distance, const RfParams& rf, double theta) {
  if (!std::holds_alternative<RayleighFading>(rf.fading)) {
    throw UnsupportedModel("closed-form RF reception probability needs Rayleigh fading");
  }
  return std::exp(-theta * rf_noise_power(rf) / rf_mean_rx_power(distance, rf));
}

double vlc_snr_no_interference(const ScenarioConfig& config) {
  return sinr(vlc_power_at_rsu(desired_vehicle_pose(config), config), 0.0,
              vlc_noise_power(config.vlc));
}

int prp_vlc_no_interference(const ScenarioConfig& config) {
  return vlc_snr_no_interference(config) >= db_to_linear(config.sinr_threshold_vlc_db) ? 1 : 0;
}

std::optional<double> vlc_cutoff_distance(const ScenarioConfig& config, double lo, double hi,
                                          double tolerance) {
  if (!(lo > 0.0 && hi > lo)) throw std::invalid_argument("vlc_cutoff_distance: need 0 < lo < hi");
  ScenarioConfig probe = config;
  auto decodes = [&](double d) {
    probe.distance_r = d;
    return prp_vlc_no_interference(probe) == 1;
  };
  const bool lo_ok = decodes(lo);
  if (lo_ok == decodes(hi)) return std::nullopt;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    (decodes(mid) == lo_ok ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace rfvlc
