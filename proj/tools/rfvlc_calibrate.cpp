// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Prints the quantities used to tune the default link budgets: the
// interference-free VLC cutoff per weather, the clear-weather VLC/RF PRP
// crossover, aggregated mean rates, and the aggregated delay outage at 200 m.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rfvlc/config.hpp"
#include "rfvlc/engine.hpp"

using namespace rfvlc;

int main(int argc, char** argv) {
  CLI::App app{"Calibration report for the default link budgets", "rfvlc-calibrate"};
  std::string config_path;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  app.add_option("--config", config_path, "Configuration file (key = value)");
  app.add_option("--trials", trials, "Trials per point")->capture_default_str();
  app.add_option("--seed", seed, "Master seed")->capture_default_str();
  app.add_option("--workers", workers, "Worker threads (0 = all cores)");
  CLI11_PARSE(app, argc, argv);

  try {
    const ScenarioConfig base = load_config(config_path).scenario;

    std::printf("interference-free VLC cutoff\n");
    for (auto kind : {WeatherKind::clear, WeatherKind::rain, WeatherKind::fog, WeatherKind::dry_snow}) {
      auto at = base;
      at.lambda_density = 0.0;
      at.weather = WeatherCondition::preset(kind);
      const auto cutoff = vlc_cutoff_distance(at, 5.0, 2000.0);
      std::printf("  %-9s %s\n", std::string(to_string(kind)).c_str(),
                  cutoff ? (std::to_string(*cutoff) + " m").c_str() : "none in [5, 2000] m");
    }

    SweepSpec spec;
    for (int d = 10; d <= 250; d += 10) spec.values.push_back(d);
    spec.modes = {Mode::pure_vlc, Mode::pure_rf, Mode::la};
    spec.metrics = {Metric::prp, Metric::rate};
    spec.n_trials = trials;
    spec.master_seed = seed;
    const auto table = run_sweep(base, spec, workers);

    std::printf("\nclear weather, %llu trials per point\n", static_cast<unsigned long long>(trials));
    std::printf("  %8s %10s %10s %10s %12s\n", "R [m]", "prp_vlc", "prp_rf", "prp_la", "la [Mbps]");
    double prev_gap = 0.0;
    double crossover = -1.0;
    for (std::size_t i = 0; i + 6 <= table.rows.size(); i += 6) {
      const double v = table.rows[i].estimate.value;
      const double r = table.rows[i + 2].estimate.value;
      const double la = table.rows[i + 4].estimate.value;
      const double rate = table.rows[i + 5].estimate.value * 1e-6;
      const double d = table.rows[i].distance_m;
      std::printf("  %8g %10.5f %10.5f %10.5f %12.2f\n", d, v, r, la, rate);
      const double gap = v - r;
      if (crossover < 0.0 && i > 0 && prev_gap > 0.0 && gap <= 0.0) {
        crossover = d - 10.0 + 10.0 * prev_gap / (prev_gap - gap);
      }
      prev_gap = gap;
    }
    if (crossover > 0.0) {
      std::printf("\nVLC/RF crossover: %.1f m\n", crossover);
    } else {
      std::printf("\nVLC/RF crossover: none in range\n");
    }

    SweepSpec tail;
    tail.values = {200.0};
    tail.modes = {Mode::la};
    tail.metrics = {Metric::dor};
    tail.t_th = 3e-3;
    tail.n_trials = trials;
    tail.master_seed = seed;
    const auto e = run_sweep(base, tail, workers).rows.at(0).estimate;
    std::printf("aggregated DOR at 200 m, 3 ms: %.6g\n", e.value);
    std::printf("rate needed for 50 KB in 3 ms: %.1f Mbps\n", 8.0 * base.payload_h / 3e-3 * 1e-6);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
