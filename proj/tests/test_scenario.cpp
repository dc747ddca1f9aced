#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/poisson.hpp>

#include "doctest.h"
#include "rfvlc/scenario.hpp"

using namespace rfvlc;

namespace {

bool has_violation(const std::vector<Violation>& v, const std::string& field) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.field == field; });
}

struct CountStats {
  double mean = 0.0;
  double variance = 0.0;
  std::map<std::size_t, std::uint64_t> histogram;
};

CountStats lane_counts(const ScenarioConfig& config, Lane lane, std::uint64_t draws,
                       std::uint64_t seed) {
  RandomStream rng(seed);
  CountStats s;
  double sum = 0.0, sum_sq = 0.0;
  for (std::uint64_t i = 0; i < draws; ++i) {
    const auto n = static_cast<double>(sample_interferers(config, rng).count(lane));
    ++s.histogram[static_cast<std::size_t>(n)];
    sum += n;
    sum_sq += n * n;
  }
  const double dn = static_cast<double>(draws);
  s.mean = sum / dn;
  s.variance = (sum_sq - sum * sum / dn) / (dn - 1.0);
  return s;
}

}  // namespace

TEST_CASE("attenuation_factor reference values") {
  CHECK(attenuation_factor(0.0, 500.0) == 1.0);
  CHECK(attenuation_factor(21.9, 0.0) == 1.0);
  CHECK(attenuation_factor(131.0, 1000.0) == doctest::Approx(7.943282347242789e-14).epsilon(1e-12));
  CHECK(attenuation_factor(21.9, 100.0) == doctest::Approx(0.6039486).epsilon(1e-6));
  CHECK_THROWS_AS(attenuation_factor(-1.0, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(attenuation_factor(1.0, -10.0), std::invalid_argument);
}

TEST_CASE("attenuation_factor is multiplicative in distance and strictly decreasing") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> coeff(0.1, 200.0), dist(0.0, 800.0);
  for (int i = 0; i < 2000; ++i) {
    const double c = coeff(gen), d1 = dist(gen), d2 = dist(gen);
    const double whole = attenuation_factor(c, d1 + d2);
    const double parts = attenuation_factor(c, d1) * attenuation_factor(c, d2);
    CHECK(std::abs(whole - parts) <= 1e-12 * parts);
    CHECK(attenuation_factor(c, d1 + 1.0) < attenuation_factor(c, d1));
    CHECK(attenuation_factor(c * 1.01, d1 + 1.0) < attenuation_factor(c, d1 + 1.0));
  }
}

TEST_CASE("weather presets") {
  CHECK(WeatherCondition::clear().attenuation_db_per_km == 0.0);
  CHECK(WeatherCondition::rain().attenuation_db_per_km == 21.9);
  CHECK(WeatherCondition::fog().attenuation_db_per_km == 78.8);
  CHECK(WeatherCondition::dry_snow().attenuation_db_per_km == 131.0);
  CHECK(*WeatherCondition::rain().descriptor == 90.0);
  CHECK(*WeatherCondition::fog().descriptor == 0.05);
  CHECK(*WeatherCondition::dry_snow().descriptor == 10.0);
  CHECK_FALSE(WeatherCondition::clear().descriptor.has_value());

  double previous = -1.0;
  for (auto kind : {WeatherKind::clear, WeatherKind::rain, WeatherKind::fog, WeatherKind::dry_snow}) {
    const auto w = WeatherCondition::preset(kind);
    CHECK(w.kind == kind);
    CHECK(w.attenuation_db_per_km > previous);
    previous = w.attenuation_db_per_km;
    CHECK(weather_kind_from_string(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(weather_kind_from_string("hail"), std::invalid_argument);
}

TEST_CASE("validate") {
  ScenarioConfig config;
  CHECK(validate(config).empty());
  CHECK(config.lambda_density == 0.01);
  CHECK(config.rho_access == 0.01);
  CHECK(config.rho_a == 0.9);
  CHECK(config.beta_ov == 0.8);
  CHECK(config.payload_h == 50.0 * 1024.0);
  CHECK(config.vlc.bandwidth == 20e6);
  CHECK(config.rf.bandwidth == 20e6);

  SUBCASE("beta_ov above one") {
    config.beta_ov = 1.2;
    const auto v = validate(config);
    CHECK(v.size() == 1);
    CHECK(has_violation(v, "beta_ov"));
  }
  SUBCASE("negative distance") {
    config.distance_r = -5.0;
    CHECK(has_violation(validate(config), "distance_r"));
  }
  SUBCASE("every violation is reported") {
    config.rho_access = 1.5;
    config.rho_a = 0.0;
    config.payload_h = 0.0;
    config.geometry.tx_height = 6.0;
    const auto v = validate(config);
    CHECK(has_violation(v, "rho_access"));
    CHECK(has_violation(v, "rho_a"));
    CHECK(has_violation(v, "payload_h"));
    CHECK(has_violation(v, "geometry.rsu_position"));
  }
  SUBCASE("clear weather must be unattenuated") {
    config.weather.attenuation_db_per_km = 3.0;
    CHECK(has_violation(validate(config), "weather.attenuation_db_per_km"));
  }
  SUBCASE("rsu normal must be unit length") {
    config.geometry.rsu_pose.axis = {0.0, 0.0, -2.0};
    CHECK(has_violation(validate(config), "geometry.rsu_normal"));
  }
  SUBCASE("radio parameters") {
    config.vlc.fov = 95.0;
    config.vlc.semi_angle_half_power = 90.0;
    config.rf.path_loss_exponent = 1.5;
    config.rf.fading = NakagamiFading{0.3};
    const auto v = validate(config);
    CHECK(has_violation(v, "vlc.fov"));
    CHECK(has_violation(v, "vlc.semi_angle_half_power"));
    CHECK(has_violation(v, "rf.path_loss_exponent"));
    CHECK(has_violation(v, "rf.nakagami_m"));
  }
  SUBCASE("require_valid throws") {
    config.lambda_density = -1.0;
    CHECK_THROWS_AS(require_valid(config), std::invalid_argument);
  }
}

TEST_CASE("normalized") {
  const Vec3 v = normalized({3.0, 0.0, 4.0});
  CHECK(v.x == doctest::Approx(0.6));
  CHECK(v.z == doctest::Approx(0.8));
  CHECK_THROWS_AS(normalized({0.0, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("zero density gives an empty deployment") {
  ScenarioConfig config;
  config.lambda_density = 0.0;
  RandomStream rng(3);
  for (int i = 0; i < 1000; ++i) CHECK(sample_interferers(config, rng).members.empty());
  config.lambda_density = 0.01;
  config.rho_access = 0.0;
  for (int i = 0; i < 1000; ++i) CHECK(sample_interferers(config, rng).members.empty());
}

TEST_CASE("interferer placement invariants") {
  ScenarioConfig config;
  config.rho_access = 0.2;
  config.geometry.lane_x_offset = 3.0;
  config.geometry.lane_y_offset = -2.0;
  config.geometry.exclusion_radius = 5.0;
  const auto& g = config.geometry;
  const Vec3 desired = desired_vehicle_pose(config).position;
  CHECK(desired.x == 53.0);
  CHECK(desired.y == -2.0);
  CHECK(desired.z == 0.75);

  RandomStream rng(11);
  std::size_t seen = 0;
  for (int i = 0; i < 300; ++i) {
    for (const auto& m : sample_interferers(config, rng).members) {
      ++seen;
      const auto& p = m.pose.position;
      CHECK(p.z == g.tx_height);
      CHECK(std::abs(norm(m.pose.axis) - 1.0) <= 1e-12);
      CHECK(norm(p - desired) >= g.exclusion_radius);
      if (m.lane == Lane::same) {
        CHECK(p.y == g.lane_y_offset);
        CHECK(std::abs(p.x - g.lane_x_offset) <= g.lane_half_length);
        CHECK(m.pose.axis.x * (p.x - g.lane_x_offset) <= 0.0);
      } else {
        CHECK(p.x == g.lane_x_offset);
        CHECK(std::abs(p.y - g.lane_y_offset) <= g.lane_half_length);
        CHECK(m.pose.axis.y * (p.y - g.lane_y_offset) <= 0.0);
      }
    }
  }
  CHECK(seen > 1000);
}

TEST_CASE("deployment mean per lane at the default densities") {
  ScenarioConfig config;
  config.geometry.exclusion_radius = 0.0;
  const std::uint64_t n = 100000;
  for (Lane lane : {Lane::same, Lane::perpendicular}) {
    const auto s = lane_counts(config, lane, n, 20221 + static_cast<int>(lane));
    CHECK(std::abs(s.mean - 0.1) <= 3.0 * std::sqrt(0.1 / n));
  }
}

TEST_CASE("deployment dispersion and chi-square goodness of fit") {
  ScenarioConfig config;
  config.rho_access = 1.0;
  config.geometry.exclusion_radius = 0.0;
  const double mu = 10.0;
  const std::uint64_t n = 100000;
  const auto s = lane_counts(config, Lane::perpendicular, n, 99);

  CHECK(std::abs(s.mean - mu) <= 3.0 * std::sqrt(mu / n));
  const double var_se = std::sqrt((2.0 * mu * mu + mu) / n);
  CHECK(std::abs(s.variance - mu) <= 3.0 * var_se);

  // Bins 0..k with expected count >= 5 each; lower and upper tails merged.
  boost::math::poisson_distribution<double> poisson(mu);
  std::vector<std::pair<double, double>> bins;  // (observed, expected)
  double obs_acc = 0.0, exp_acc = 0.0;
  std::size_t k = 0;
  for (; boost::math::cdf(boost::math::complement(poisson, static_cast<double>(k))) * n >= 5.0; ++k) {
    obs_acc += static_cast<double>(s.histogram.count(k) ? s.histogram.at(k) : 0);
    exp_acc += boost::math::pdf(poisson, static_cast<double>(k)) * n;
    if (exp_acc >= 5.0) {
      bins.emplace_back(obs_acc, exp_acc);
      obs_acc = exp_acc = 0.0;
    }
  }
  double tail_obs = obs_acc;
  for (const auto& [count, freq] : s.histogram) {
    if (count >= k) tail_obs += static_cast<double>(freq);
  }
  const double tail_exp = n - std::accumulate(bins.begin(), bins.end(), 0.0,
                                              [](double a, const auto& b) { return a + b.second; });
  bins.emplace_back(tail_obs, tail_exp);

  double chi2 = 0.0;
  for (const auto& [o, e] : bins) chi2 += (o - e) * (o - e) / e;
  const double critical = boost::math::quantile(
      boost::math::chi_squared_distribution<double>(static_cast<double>(bins.size() - 1)), 0.99);
  INFO("chi2 = " << chi2 << ", critical = " << critical << ", bins = " << bins.size());
  CHECK(chi2 < critical);
}

TEST_CASE("exclusion removes same-lane points near the desired vehicle") {
  ScenarioConfig config;
  config.rho_access = 1.0;
  config.geometry.exclusion_radius = 100.0;
  const std::uint64_t n = 20000;
  const auto s = lane_counts(config, Lane::same, n, 5);
  const double expected = config.lambda_density * (1000.0 - 200.0);
  CHECK(std::abs(s.mean - expected) <= 4.0 * std::sqrt(expected / n));
}

TEST_CASE("thinning composes with density") {
  ScenarioConfig thinned;
  thinned.lambda_density = 0.01;
  thinned.rho_access = 0.3;
  thinned.geometry.exclusion_radius = 0.0;
  ScenarioConfig dense = thinned;
  dense.lambda_density = 0.003;
  dense.rho_access = 1.0;

  const std::uint64_t n = 100000;
  const auto a = lane_counts(thinned, Lane::same, n, 1);
  const auto b = lane_counts(dense, Lane::same, n, 2);
  const double se = std::sqrt(a.variance / n + b.variance / n);
  CHECK(std::abs(a.mean - b.mean) <= 3.0 * se);
  CHECK(std::abs(a.variance - b.variance) <= 0.1 * b.variance);
}
