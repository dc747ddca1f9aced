// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfvlc/commands.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <system_error>

#ifndef RFVLC_VERSION
#define RFVLC_VERSION "unknown"
#endif

namespace fs = std::filesystem;

namespace rfvlc {

std::string tool_version() { return RFVLC_VERSION; }

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

ExperimentConfig apply_overrides(ExperimentConfig config, const RunManifest& manifest) {
  if (manifest.seed_override) config.sweep.seed = *manifest.seed_override;
  if (manifest.trials_override) config.sweep.n_trials = *manifest.trials_override;
  if (manifest.weathers_override) config.sweep.weathers = *manifest.weathers_override;
  if (manifest.modes_override) config.sweep.modes = *manifest.modes_override;
  // Re-run validation on the overridden values.
  return parse_config(to_config_text(config));
}

namespace {

// Removes every registered file unless commit() is reached.
class OutputSet {
 public:
  explicit OutputSet(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec || !fs::is_directory(dir_)) {
      throw std::runtime_error("cannot create output directory '" + dir_.string() + "'");
    }
  }
  OutputSet(const OutputSet&) = delete;
  OutputSet& operator=(const OutputSet&) = delete;
  ~OutputSet() {
    if (committed_) return;
    for (const auto& p : created_) {
      std::error_code ec;
      fs::remove(p, ec);
    }
  }

  std::ofstream& open(const std::string& name) {
    const fs::path path = dir_ / name;
    created_.push_back(path);
    auto& stream = streams_[name];
    stream = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*stream) throw std::runtime_error("cannot write '" + path.string() + "'");
    return *stream;
  }

  void write(const std::string& name, const std::string& content) {
    auto& out = open(name);
    out << content;
    finish(name);
  }

  void finish(const std::string& name) {
    auto& stream = streams_.at(name);
    stream->flush();
    if (!*stream) throw std::runtime_error("write failed for '" + (dir_ / name).string() + "'");
    stream->close();
  }

  fs::path path(const std::string& name) const { return dir_ / name; }
  void commit() { committed_ = true; }

 private:
  fs::path dir_;
  std::vector<fs::path> created_;
  std::map<std::string, std::unique_ptr<std::ofstream>> streams_;
  bool committed_ = false;
};

std::string estimate_columns(const MetricEstimate& e, double scale) {
  return format_number(e.value * scale) + "," + format_number(e.stderr_ * scale) + "," +
         format_number(e.ci95_low * scale) + "," + format_number(e.ci95_high * scale) + "," +
         std::to_string(e.n_trials);
}

std::string distance_table_csv(const SweepTable& table, const char* header, double scale) {
  std::string out = std::string(header) + "\n";
  for (const auto& row : table.rows) {
    out += format_number(row.distance_m) + "," + std::string(to_string(row.weather.kind)) + "," +
           std::string(to_string(row.mode)) + "," + estimate_columns(row.estimate, scale) + "\n";
  }
  return out;
}

std::string now_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

// One whitespace-delimited file per curve, keyed by the row's grouping.
void write_gnuplot(OutputSet& out, const SweepTable& table, const std::string& kind, double scale) {
  std::map<std::string, std::string> curves;
  std::vector<std::string> order;
  for (const auto& row : table.rows) {
    std::string name = kind + "_";
    if (table.variable == SweepVariable::t_th) name += "d" + format_number(row.distance_m) + "_";
    name += std::string(to_string(row.weather.kind)) + "_" + std::string(to_string(row.mode)) + ".dat";
    auto [it, inserted] = curves.try_emplace(name);
    if (inserted) {
      order.push_back(name);
      it->second = table.variable == SweepVariable::t_th ? "# t_th_ms " : "# distance_m ";
      it->second += kind + " stderr\n";
    }
    const double x = table.variable == SweepVariable::t_th ? row.t_th_s * 1000.0 : row.distance_m;
    it->second += format_number(x) + " " + format_number(row.estimate.value * scale) + " " +
                  format_number(row.estimate.stderr_ * scale) + "\n";
  }
  for (const auto& name : order) out.write(name, curves[name]);
}

std::string manifest_text(const RunManifest& m, const ExperimentConfig& config,
                          const SweepSpec& spec) {
  std::ostringstream s;
  s << "tool = rfvlc-sim\n"
    << "tool_version = " << m.tool_version << "\n"
    << "subcommand = " << m.subcommand << "\n"
    << "config_path = " << (m.config_path.empty() ? "(defaults)" : m.config_path) << "\n"
    << "output_dir = " << m.output_dir.string() << "\n"
    << "master_seed = " << spec.master_seed << "\n"
    << "seed_override = " << (m.seed_override ? std::to_string(*m.seed_override) : "none") << "\n"
    << "n_trials = " << spec.n_trials << "\n"
    << "timestamp = " << (m.timestamp.empty() ? now_utc() : m.timestamp) << "\n"
    << "config_hash = " << config_hash(config) << "\n"
    << "effective_config = run.config\n";
  return s.str();
}

using Formatter = std::string (*)(const SweepTable&);

fs::path run_command(const RunManifest& manifest, const ExperimentConfig& config, const SweepSpec& spec,
                     const std::string& csv_name, Formatter format, const std::string& kind,
                     double gnuplot_scale) {
  OutputSet out(manifest.output_dir);

  TrialObserver observer;
  std::ofstream* dump = nullptr;
  if (manifest.dump_trials) {
    dump = &out.open("trials.csv");
    *dump << "point_index,distance_m,weather,trial,sinr_vlc,sinr_rf,n_same,n_perp\n";
    observer = [dump](std::uint64_t point, double distance, const WeatherCondition& weather,
                      std::span<const TrialOutcome> outcomes) {
      char buf[160];
      for (std::size_t j = 0; j < outcomes.size(); ++j) {
        const auto& o = outcomes[j];
        std::snprintf(buf, sizeof buf, "%llu,%.17g,%s,%zu,%.17g,%.17g,%zu,%zu\n",
                      static_cast<unsigned long long>(point), distance,
                      std::string(to_string(weather.kind)).c_str(), j, o.sinr_vlc, o.sinr_rf,
                      o.n_interferers_same, o.n_interferers_perp);
        *dump << buf;
      }
    };
  }

  const SweepTable table = run_sweep(config.scenario, spec, manifest.workers, observer);
  if (dump) out.finish("trials.csv");

  out.write(csv_name, format(table));
  if (manifest.gnuplot) write_gnuplot(out, table, kind, gnuplot_scale);
  out.write("run.config", to_config_text(config));
  out.write("run.manifest", manifest_text(manifest, config, spec));
  out.commit();
  return out.path(csv_name);
}

}  // namespace

std::string format_prp_csv(const SweepTable& table) { return distance_table_csv(table, kPrpHeader, 1.0); }

std::string format_rate_csv(const SweepTable& table) {
  return distance_table_csv(table, kRateHeader, 1e-6);
}

std::string format_dor_csv(const SweepTable& table) {
  std::string out = std::string(kDorHeader) + "\n";
  for (const auto& row : table.rows) {
    out += format_number(row.t_th_s * 1000.0) + "," + format_number(row.distance_m) + "," +
           std::string(to_string(row.weather.kind)) + "," + std::string(to_string(row.mode)) + "," +
           estimate_columns(row.estimate, 1.0) + "\n";
  }
  return out;
}

fs::path cmd_prp_sweep(const RunManifest& manifest, const ExperimentConfig& config) {
  const auto effective = apply_overrides(config, manifest);
  return run_command(manifest, effective, make_prp_spec(effective), "prp_sweep.csv", format_prp_csv,
                     "prp", 1.0);
}

fs::path cmd_dor_sweep(const RunManifest& manifest, const ExperimentConfig& config) {
  const auto effective = apply_overrides(config, manifest);
  return run_command(manifest, effective, make_dor_spec(effective), "dor_sweep.csv", format_dor_csv,
                     "dor", 1.0);
}

fs::path cmd_rate_sweep(const RunManifest& manifest, const ExperimentConfig& config) {
  const auto effective = apply_overrides(config, manifest);
  return run_command(manifest, effective, make_rate_spec(effective), "rate_sweep.csv",
                     format_rate_csv, "rate_mbps", 1e-6);
}

}  // namespace rfvlc
