// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: prp-sweep, dor-sweep, rate-sweep, validate.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rfvlc/commands.hpp"
#include "rfvlc/config.hpp"

namespace {

struct Options {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::vector<std::string> weathers;
  std::vector<std::string> modes;
  bool gnuplot = false;
  bool dump_trials = false;
  unsigned workers = 0;
};

void add_run_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--config", opt.config_path, "Configuration file (key = value)");
  cmd->add_option("--out", opt.out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--seed", opt.seed, "Master seed override");
  cmd->add_option("--trials", opt.trials, "Trials per sweep point");
  cmd->add_option("--weather", opt.weathers, "Comma-separated weathers (clear,rain,fog,dry_snow)")
      ->delimiter(',');
  cmd->add_option("--modes", opt.modes, "Comma-separated modes (pure_vlc,pure_rf,la,non_la)")
      ->delimiter(',');
  cmd->add_flag("--gnuplot", opt.gnuplot, "Also write whitespace-delimited per-curve files");
  cmd->add_flag("--dump-trials", opt.dump_trials, "Write every trial's SINRs to trials.csv");
  cmd->add_option("--workers", opt.workers, "Worker threads (0 = all cores)")->capture_default_str();
}

rfvlc::RunManifest make_manifest(const std::string& subcommand, const Options& opt) {
  rfvlc::RunManifest m;
  m.config_path = opt.config_path;
  m.subcommand = subcommand;
  m.output_dir = opt.out_dir;
  m.seed_override = opt.seed;
  m.trials_override = opt.trials;
  if (!opt.weathers.empty()) {
    std::vector<rfvlc::WeatherCondition> list;
    for (const auto& w : opt.weathers) {
      list.push_back(rfvlc::WeatherCondition::preset(rfvlc::weather_kind_from_string(w)));
    }
    m.weathers_override = std::move(list);
  }
  if (!opt.modes.empty()) {
    std::vector<rfvlc::Mode> list;
    for (const auto& name : opt.modes) list.push_back(rfvlc::mode_from_string(name));
    m.modes_override = std::move(list);
  }
  m.gnuplot = opt.gnuplot;
  m.dump_trials = opt.dump_trials;
  m.workers = opt.workers;
  return m;
}

void print_violations(const rfvlc::ConfigError& e) {
  if (e.violations().empty()) {
    std::cerr << "error: " << e.what() << "\n";
    return;
  }
  for (const auto& v : e.violations()) std::cerr << "violation: " << v.field << ": " << v.message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo simulator for hybrid RF/VLC vehicle-to-RSU uplinks", "rfvlc-sim"};
  app.set_version_flag("--version", rfvlc::tool_version());
  app.require_subcommand(1);

  Options opt;
  auto* prp = app.add_subcommand("prp-sweep", "Packet reception probability vs distance");
  auto* dor = app.add_subcommand("dor-sweep", "Delay outage rate vs delay threshold");
  auto* rate = app.add_subcommand("rate-sweep", "Mean achievable rate vs distance");
  auto* validate = app.add_subcommand("validate", "Check a configuration file");
  for (auto* cmd : {prp, dor, rate}) add_run_options(cmd, opt);
  validate->add_option("--config", opt.config_path, "Configuration file (key = value)");

  CLI11_PARSE(app, argc, argv);

  try {
    const rfvlc::ExperimentConfig config = rfvlc::load_config(opt.config_path);

    if (validate->parsed()) {
      std::cout << "ok " << rfvlc::config_hash(config) << "\n";
      return 0;
    }

    std::filesystem::path csv;
    if (prp->parsed()) {
      csv = rfvlc::cmd_prp_sweep(make_manifest("prp-sweep", opt), config);
    } else if (dor->parsed()) {
      csv = rfvlc::cmd_dor_sweep(make_manifest("dor-sweep", opt), config);
    } else {
      csv = rfvlc::cmd_rate_sweep(make_manifest("rate-sweep", opt), config);
    }
    std::cout << "wrote " << csv.string() << "\n";
    return 0;
  } catch (const rfvlc::ConfigError& e) {
    print_violations(e);
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
