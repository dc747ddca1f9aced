// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfvlc/engine.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rfvlc {

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::prp: return "prp";
    case Metric::dor: return "dor";
    case Metric::rate: return "rate";
  }
  return "unknown";
}

namespace {

constexpr std::uint64_t kPointBits = 24;
constexpr std::uint64_t kTrialBits = 40;

constexpr std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool strictly_increasing(const std::vector<double>& v) {
  return std::adjacent_find(v.begin(), v.end(), [](double a, double b) { return !(a < b); }) == v.end();
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t point_index,
                          std::uint64_t trial_index) {
  if (point_index >> kPointBits || trial_index >> kTrialBits) {
    throw std::out_of_range("derive_seed: point or trial index too large");
  }
  return mix(mix(master_seed) ^ ((point_index << kTrialBits) | trial_index));
}

std::vector<Violation> validate(const SweepSpec& spec) {
  std::vector<Violation> out;
  auto check = [&](bool ok, const char* field, const char* message) {
    if (!ok) out.push_back({field, message});
  };
  check(!spec.values.empty(), "values", "must not be empty");
  check(strictly_increasing(spec.values), "values", "must be strictly increasing");
  check(spec.n_trials >= 100, "n_trials", "must be >= 100");
  check(spec.n_trials < (std::uint64_t{1} << kTrialBits), "n_trials", "too many trials per point");
  check(!spec.weathers.empty(), "weathers", "must not be empty");
  check(!spec.modes.empty(), "modes", "must not be empty");
  check(!spec.metrics.empty(), "metrics", "must not be empty");
  check(spec.t_th > 0.0, "t_th", "must be > 0");
  const auto& distances =
      spec.variable == SweepVariable::distance_r ? spec.values : spec.distances;
  check(!distances.empty(), "distances", "must not be empty");
  check(std::all_of(distances.begin(), distances.end(), [](double d) { return d > 0.0; }),
        "distances", "must be > 0");
  check(distances.size() < (std::size_t{1} << kPointBits), "distances", "too many sweep points");
  if (spec.variable == SweepVariable::t_th) {
    check(std::all_of(spec.values.begin(), spec.values.end(), [](double t) { return t > 0.0; }),
          "values", "thresholds must be > 0");
  }
  return out;
}

std::vector<TrialOutcome> simulate_point(const ScenarioConfig& config, std::uint64_t point_index,
                                         std::uint64_t master_seed, std::uint64_t n_trials,
                                         unsigned workers) {
  require_valid(config);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(n_trials, 1)));

  std::vector<TrialOutcome> outcomes(n_trials);
  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t j = begin; j < end; ++j) {
      RandomStream rng(derive_seed(master_seed, point_index, j));
      outcomes[j] = run_trial(config, rng);
    }
  };

  if (workers <= 1) {
    run_range(0, n_trials);
    return outcomes;
  }

  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (n_trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(n_trials, w * chunk);
      const std::uint64_t end = std::min(n_trials, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        try {
          run_range(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return outcomes;
}

SweepTable run_sweep(const ScenarioConfig& config, const SweepSpec& spec, unsigned workers,
                     const TrialObserver& observer) {
  require_valid(config);
  if (const auto violations = validate(spec); !violations.empty()) {
    std::ostringstream msg;
    msg << "invalid sweep:";
    for (const auto& v : violations) msg << ' ' << v.field << " (" << v.message << ");";
    throw std::invalid_argument(msg.str());
  }

  const bool by_distance = spec.variable == SweepVariable::distance_r;
  const auto& distances = by_distance ? spec.values : spec.distances;
  // Thresholds evaluated at each distance: the fixed t_th, or every sweep value.
  const std::vector<double> thresholds = by_distance ? std::vector<double>{spec.t_th} : spec.values;

  const double theta_vlc = db_to_linear(config.sinr_threshold_vlc_db);
  const double theta_rf = db_to_linear(config.sinr_threshold_rf_db);

  const std::size_t per_weather = spec.modes.size() * spec.metrics.size();
  const std::size_t per_threshold = spec.weathers.size() * per_weather;

  SweepTable table;
  table.variable = spec.variable;
  table.rows.reserve(distances.size() * thresholds.size() * per_threshold);

  for (std::size_t p = 0; p < distances.size(); ++p) {
    // Indexed [threshold][weather][mode][metric], filled weather by weather.
    std::vector<SweepRow> block(thresholds.size() * per_threshold);

    for (std::size_t w = 0; w < spec.weathers.size(); ++w) {
      ScenarioConfig point = config;
      point.distance_r = distances[p];
      point.weather = spec.weathers[w];
      const auto outcomes = simulate_point(point, p, spec.master_seed, spec.n_trials, workers);
      if (observer) observer(p, distances[p], point.weather, outcomes);

      for (std::size_t t = 0; t < thresholds.size(); ++t) {
        for (std::size_t m = 0; m < spec.modes.size(); ++m) {
          for (std::size_t k = 0; k < spec.metrics.size(); ++k) {
            const Mode mode = spec.modes[m];
            SweepRow& row = block[t * per_threshold + w * per_weather + m * spec.metrics.size() + k];
            row.distance_m = distances[p];
            row.t_th_s = thresholds[t];
            row.weather = point.weather;
            row.mode = mode;
            row.metric = spec.metrics[k];
            switch (row.metric) {
              case Metric::prp: row.estimate = prp(outcomes, mode, theta_vlc, theta_rf); break;
              case Metric::dor: row.estimate = dor(outcomes, mode, point, thresholds[t]); break;
              case Metric::rate: row.estimate = mean_rate(outcomes, mode, point); break;
            }
          }
        }
      }
    }
    table.rows.insert(table.rows.end(), block.begin(), block.end());
  }
  return table;
}

}  // namespace rfvlc
