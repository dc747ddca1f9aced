#include <bit>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "rfvlc/engine.hpp"

using namespace rfvlc;

namespace {

SweepSpec small_spec() {
  SweepSpec spec;
  spec.values = {40.0, 120.0, 200.0};
  spec.weathers = {WeatherCondition::clear(), WeatherCondition::fog()};
  spec.modes = {Mode::pure_vlc, Mode::pure_rf, Mode::la};
  spec.metrics = {Metric::prp, Metric::rate};
  spec.n_trials = 2000;
  spec.master_seed = 314;
  return spec;
}

bool same_rows(const SweepTable& a, const SweepTable& b) {
  if (a.variable != b.variable || a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto& x = a.rows[i];
    const auto& y = b.rows[i];
    if (x.distance_m != y.distance_m || x.t_th_s != y.t_th_s || x.weather != y.weather ||
        x.mode != y.mode || x.metric != y.metric || !(x.estimate == y.estimate)) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("derive_seed reference values") {
  CHECK(derive_seed(0, 0, 0) == 0xa706dd2f4d197e6fULL);
  CHECK(derive_seed(1, 0, 0) == 0x5e41ab087439611eULL);
  CHECK(derive_seed(20221, 3, 7) == 0x8ccc6d71c6275b7aULL);
  CHECK(derive_seed(~0ULL, (1ULL << 24) - 1, (1ULL << 40) - 1) == 0x6309143e67a47936ULL);
  CHECK(derive_seed(9, 4, 2) == derive_seed(9, 4, 2));
  CHECK_THROWS_AS(derive_seed(1, 1ULL << 24, 0), std::out_of_range);
  CHECK_THROWS_AS(derive_seed(1, 0, 1ULL << 40), std::out_of_range);
}

TEST_CASE("derive_seed collision scan") {
  std::mt19937_64 gen(2024);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t s = gen();
    const auto base = derive_seed(s, 0, 0);
    CHECK(base != derive_seed(s, 0, 1));
    CHECK(base != derive_seed(s, 1, 0));
  }

  // Every stream of a small sweep is distinct.
  std::set<std::uint64_t> seen;
  for (std::uint64_t p = 0; p < 25; ++p) {
    for (std::uint64_t j = 0; j < 4000; ++j) seen.insert(derive_seed(77, p, j));
  }
  CHECK(seen.size() == 25 * 4000);
}

TEST_CASE("derive_seed avalanche on the master seed") {
  std::mt19937_64 gen(99);
  int changed = 0;
  double total_flips = 0.0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t s = gen();
    const std::uint64_t flipped = s ^ (1ULL << (gen() % 64));
    const std::uint64_t p = gen() % 1000, j = gen() % 100000;
    const int flips = std::popcount(derive_seed(s, p, j) ^ derive_seed(flipped, p, j));
    changed += flips > 0;
    total_flips += flips;
  }
  CHECK(changed >= 0.99 * n);
  CHECK(total_flips / n == doctest::Approx(32.0).epsilon(0.03));
}

TEST_CASE("sweep spec validation") {
  SweepSpec spec = small_spec();
  CHECK(validate(spec).empty());
  spec.values = {};
  CHECK_FALSE(validate(spec).empty());
  spec.values = {50.0, 50.0};
  CHECK_FALSE(validate(spec).empty());
  spec.values = {50.0, 40.0};
  CHECK_FALSE(validate(spec).empty());
  spec = small_spec();
  spec.n_trials = 99;
  CHECK(validate(spec).front().field == "n_trials");
  spec = small_spec();
  spec.values = {-10.0, 10.0};
  CHECK_FALSE(validate(spec).empty());

  spec = small_spec();
  spec.variable = SweepVariable::t_th;
  spec.values = {1e-3, 2e-3};
  CHECK_FALSE(validate(spec).empty());  // no distances
  spec.distances = {50.0};
  CHECK(validate(spec).empty());
}

TEST_CASE("simulate_point uses one derived stream per trial") {
  ScenarioConfig config;
  config.rho_access = 0.2;
  const auto outcomes = simulate_point(config, 5, 42, 300, 3);
  REQUIRE(outcomes.size() == 300);
  for (std::uint64_t j = 0; j < 300; j += 37) {
    RandomStream rng(derive_seed(42, 5, j));
    CHECK(outcomes[j] == run_trial(config, rng));
  }
}

TEST_CASE("simulate_point is independent of the worker count") {
  ScenarioConfig config;
  config.rho_access = 0.1;
  const auto one = simulate_point(config, 2, 7, 5003, 1);
  for (unsigned w : {2u, 3u, 8u, 0u}) CHECK(simulate_point(config, 2, 7, 5003, w) == one);
}

TEST_CASE("run_sweep rows follow the declared cartesian order") {
  const auto spec = small_spec();
  const auto table = run_sweep(ScenarioConfig{}, spec, 2);
  REQUIRE(table.rows.size() == 3 * 2 * 3 * 2);
  std::size_t i = 0;
  for (double d : spec.values) {
    for (const auto& w : spec.weathers) {
      for (Mode m : spec.modes) {
        for (Metric k : spec.metrics) {
          const auto& row = table.rows[i++];
          CHECK(row.distance_m == d);
          CHECK(row.weather == w);
          CHECK(row.mode == m);
          CHECK(row.metric == k);
          CHECK(row.estimate.n_trials == spec.n_trials);
          CHECK(row.estimate.ci95_low <= row.estimate.value);
          CHECK(row.estimate.value <= row.estimate.ci95_high);
        }
      }
    }
  }
}

TEST_CASE("threshold sweep rows") {
  SweepSpec spec;
  spec.variable = SweepVariable::t_th;
  spec.values = {1e-3, 2e-3, 4e-3};
  spec.distances = {50.0, 200.0};
  spec.modes = {Mode::la, Mode::pure_rf};
  spec.metrics = {Metric::dor};
  spec.n_trials = 1000;
  const auto table = run_sweep(ScenarioConfig{}, spec, 2);
  REQUIRE(table.rows.size() == 2 * 3 * 1 * 2);
  std::size_t i = 0;
  for (double d : spec.distances) {
    for (double t : spec.values) {
      for (Mode m : spec.modes) {
        const auto& row = table.rows[i++];
        CHECK(row.distance_m == d);
        CHECK(row.t_th_s == t);
        CHECK(row.mode == m);
      }
    }
  }
}

TEST_CASE("run_sweep is reproducible across runs and worker counts") {
  const auto spec = small_spec();
  const auto a = run_sweep(ScenarioConfig{}, spec, 1);
  CHECK(same_rows(a, run_sweep(ScenarioConfig{}, spec, 1)));
  CHECK(same_rows(a, run_sweep(ScenarioConfig{}, spec, 4)));

  auto other = spec;
  other.master_seed = 315;
  CHECK_FALSE(same_rows(a, run_sweep(ScenarioConfig{}, other, 4)));

  SweepSpec tiny;
  tiny.values = {50.0};
  tiny.modes = {Mode::pure_rf};
  tiny.n_trials = 1000;
  tiny.master_seed = 11;
  CHECK(same_rows(run_sweep(ScenarioConfig{}, tiny, 1), run_sweep(ScenarioConfig{}, tiny, 3)));
}

TEST_CASE("RF rows do not depend on the weather") {
  auto spec = small_spec();
  spec.weathers = {WeatherCondition::clear(), WeatherCondition::rain(), WeatherCondition::dry_snow()};
  const auto table = run_sweep(ScenarioConfig{}, spec, 2);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    if (r.mode != Mode::pure_rf) continue;
    for (std::size_t j = i + 1; j < table.rows.size(); ++j) {
      const auto& s = table.rows[j];
      if (s.mode == r.mode && s.metric == r.metric && s.distance_m == r.distance_m) {
        CHECK(s.estimate == r.estimate);
      }
    }
  }
}

TEST_CASE("invalid input is rejected before any trial runs") {
  bool called = false;
  const TrialObserver observer = [&](std::uint64_t, double, const WeatherCondition&,
                                     std::span<const TrialOutcome>) { called = true; };
  ScenarioConfig bad;
  bad.rho_a = 0.0;
  CHECK_THROWS_AS(run_sweep(bad, small_spec(), 1, observer), std::invalid_argument);
  auto spec = small_spec();
  spec.n_trials = 10;
  CHECK_THROWS_AS(run_sweep(ScenarioConfig{}, spec, 1, observer), std::invalid_argument);
  CHECK_FALSE(called);
}

TEST_CASE("observer sees every simulated point") {
  const auto spec = small_spec();
  std::size_t calls = 0;
  const TrialObserver observer = [&](std::uint64_t point, double distance, const WeatherCondition&,
                                     std::span<const TrialOutcome> outcomes) {
    CHECK(spec.values[point] == distance);
    CHECK(outcomes.size() == spec.n_trials);
    ++calls;
  };
  run_sweep(ScenarioConfig{}, spec, 2, observer);
  CHECK(calls == spec.values.size() * spec.weathers.size());
}

TEST_CASE("standard error halves when the trial count quadruples") {
  ScenarioConfig config;
  SweepSpec spec;
  spec.values = {130.0};
  spec.modes = {Mode::pure_rf};
  spec.metrics = {Metric::prp, Metric::rate};
  spec.n_trials = 10000;
  const auto small = run_sweep(config, spec, 0);
  spec.n_trials = 40000;
  const auto large = run_sweep(config, spec, 0);
  for (std::size_t k = 0; k < 2; ++k) {
    const double ratio = large.rows[k].estimate.stderr_ / small.rows[k].estimate.stderr_;
    INFO("metric " << to_string(spec.metrics[k]) << " ratio " << ratio);
    CHECK(std::abs(ratio - 0.5) <= 0.1);
  }
}

TEST_CASE("interference-free RF sweep matches the closed form") {
  ScenarioConfig config;
  config.lambda_density = 0.0;
  SweepSpec spec;
  spec.values = {25.0, 75.0, 150.0, 250.0};
  spec.modes = {Mode::pure_rf};
  spec.n_trials = 20000;
  const auto table = run_sweep(config, spec, 0);
  const double theta = db_to_linear(config.sinr_threshold_rf_db);
  for (const auto& row : table.rows) {
    auto at = config;
    at.distance_r = row.distance_m;
    const double exact = prp_rf_closed_form_no_interference(desired_link_distance(at), config.rf, theta);
    const double se = std::sqrt(exact * (1.0 - exact) / spec.n_trials);
    CHECK(std::abs(row.estimate.value - exact) <= 3.0 * se);
  }
}

TEST_CASE("aggregated mean rate falls with distance") {
  SweepSpec spec;
  spec.values = {50.0, 100.0, 150.0, 200.0, 250.0};
  spec.modes = {Mode::la};
  spec.metrics = {Metric::rate};
  spec.n_trials = 10000;
  const auto table = run_sweep(ScenarioConfig{}, spec, 0);
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    CHECK(table.rows[i].estimate.value <= table.rows[i - 1].estimate.value);
  }
}

TEST_CASE("metric names") {
  CHECK(to_string(Metric::prp) == "prp");
  CHECK(to_string(Metric::dor) == "dor");
  CHECK(to_string(Metric::rate) == "rate");
}
