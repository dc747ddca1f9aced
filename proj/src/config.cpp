// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0

#include "rfvlc/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace rfvlc {

ConfigError::ConfigError(const std::string& what, std::vector<Violation> violations)
    : std::runtime_error(what), violations_(std::move(violations)) {}

namespace {

std::vector<double> arange(double start, double stop, double step) {
  std::vector<double> out;
  const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  for (long i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

}  // namespace

SweepSettings::SweepSettings()
    : prp_distances(arange(10.0, 250.0, 10.0)),
      rate_distances{50.0, 100.0, 150.0, 200.0, 250.0},
      dor_thresholds_ms(arange(0.5, 10.0, 0.5)),
      dor_distances{50.0, 200.0},
      weathers{WeatherCondition::clear(), WeatherCondition::rain(), WeatherCondition::fog(),
               WeatherCondition::dry_snow()} {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

// Value-level failures carry no line number; the caller adds it.
struct ValueError {
  std::string message;
};

double to_double(std::string_view s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || s.empty()) throw ValueError{"expected a number, got '" + std::string(s) + "'"};
  return v;
}

std::uint64_t to_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || s.empty()) {
    throw ValueError{"expected a nonnegative integer, got '" + std::string(s) + "'"};
  }
  return v;
}

// Comma-separated numbers; an item "start:stop:step" expands to an inclusive range.
std::vector<double> to_double_list(std::string_view s) {
  std::vector<double> out;
  for (auto item : split_list(s)) {
    if (item.find(':') != std::string_view::npos) {
      std::vector<double> parts;
      for (std::size_t pos = 0;;) {
        const auto colon = item.find(':', pos);
        parts.push_back(to_double(trim(item.substr(pos, colon - pos))));
        if (colon == std::string_view::npos) break;
        pos = colon + 1;
      }
      if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
        throw ValueError{"range must be start:stop:step with step > 0 and stop >= start"};
      }
      const auto range = arange(parts[0], parts[1], parts[2]);
      out.insert(out.end(), range.begin(), range.end());
    } else {
      out.push_back(to_double(item));
    }
  }
  return out;
}

Vec3 to_vec3(std::string_view s) {
  const auto v = to_double_list(s);
  if (v.size() != 3) throw ValueError{"expected three comma-separated numbers"};
  return {v[0], v[1], v[2]};
}

template <typename F>
auto wrap_invalid(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw ValueError{e.what()};
  }
}

// Shortest text that parses back to the same double.
std::string fmt(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string fmt_list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + fmt(v[i]);
  return out;
}

template <typename T>
std::string join_names(const std::vector<T>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    out += (i ? ", " : "") + std::string(to_string(items[i]));
  }
  return out;
}

std::string weather_names(const std::vector<WeatherCondition>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? ", " : "") + std::string(to_string(w[i].kind));
  return out;
}

using Setter = std::function<void(ExperimentConfig&, std::string_view)>;
// Returns nullopt when the key is omitted from the canonical text.
using Getter = std::function<std::optional<std::string>(const ExperimentConfig&)>;

struct Field {
  std::string key;
  Setter set;
  Getter get;
};

template <typename Access>
Field number(std::string key, Access access) {
  return {std::move(key),
          [access](ExperimentConfig& c, std::string_view v) { access(c) = to_double(v); },
          [access](const ExperimentConfig& c) -> std::optional<std::string> {
            return fmt(access(c));
          }};
}

#define RFVLC_FIELD(key, expr) number(key, [](auto& c) -> auto& { return expr; })

// Application order matters: `weather` resets the preset before the
// weather.* overrides, `rf.fading` precedes `rf.nakagami_m`.
const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> f;
    f.push_back(RFVLC_FIELD("lambda_density", c.scenario.lambda_density));
    f.push_back(RFVLC_FIELD("rho_access", c.scenario.rho_access));
    f.push_back(RFVLC_FIELD("rho_a", c.scenario.rho_a));
    f.push_back(RFVLC_FIELD("beta_ov", c.scenario.beta_ov));
    f.push_back(RFVLC_FIELD("distance_r", c.scenario.distance_r));
    f.push_back(RFVLC_FIELD("payload_h", c.scenario.payload_h));
    f.push_back(RFVLC_FIELD("sinr_threshold_vlc_db", c.scenario.sinr_threshold_vlc_db));
    f.push_back(RFVLC_FIELD("sinr_threshold_rf_db", c.scenario.sinr_threshold_rf_db));

    f.push_back({"weather",
                 [](ExperimentConfig& c, std::string_view v) {
                   c.scenario.weather =
                       WeatherCondition::preset(wrap_invalid([&] { return weather_kind_from_string(v); }));
                 },
                 [](const ExperimentConfig& c) -> std::optional<std::string> {
                   return std::string(to_string(c.scenario.weather.kind));
                 }});
    f.push_back({"weather.descriptor",
                 [](ExperimentConfig& c, std::string_view v) {
                   c.scenario.weather.descriptor =
                       v == "none" ? std::nullopt : std::optional<double>(to_double(v));
                 },
                 [](const ExperimentConfig& c) -> std::optional<std::string> {
                   const auto& d = c.scenario.weather.descriptor;
                   return d ? fmt(*d) : std::string("none");
                 }});
    f.push_back(RFVLC_FIELD("weather.attenuation_db_per_km", c.scenario.weather.attenuation_db_per_km));

    f.push_back(RFVLC_FIELD("geometry.lane_half_length", c.scenario.geometry.lane_half_length));
    f.push_back(RFVLC_FIELD("geometry.lane_x_offset", c.scenario.geometry.lane_x_offset));
    f.push_back(RFVLC_FIELD("geometry.lane_y_offset", c.scenario.geometry.lane_y_offset));
    f.push_back(RFVLC_FIELD("geometry.tx_height", c.scenario.geometry.tx_height));
    f.push_back(RFVLC_FIELD("geometry.exclusion_radius", c.scenario.geometry.exclusion_radius));
    f.push_back({"geometry.rsu_position",
                 [](ExperimentConfig& c, std::string_view v) { c.scenario.geometry.rsu_pose.position = to_vec3(v); },
                 [](const ExperimentConfig& c) -> std::optional<std::string> {
                   const Vec3 p = c.scenario.geometry.rsu_pose.position;
                   return fmt_list({p.x, p.y, p.z});
                 }});
    f.push_back({"geometry.rsu_normal",
                 [](ExperimentConfig& c, std::string_view v) {
                   const Vec3 axis = to_vec3(v);
                   // Already-unit vectors are kept verbatim so canonical text round-trips.
                   c.scenario.geometry.rsu_pose.axis =
                       std::abs(norm(axis) - 1.0) <= 1e-12 ? axis : wrap_invalid([&] { return normalized(axis); });
                 },
                 [](const ExperimentConfig& c) -> std::optional<std::string> {
                   const Vec3 a = c.scenario.geometry.rsu_pose.axis;
                   return fmt_list({a.x, a.y, a.z});
                 }});

    f.push_back(RFVLC_FIELD("vlc.optical_tx_power", c.scenario.vlc.optical_tx_power));
    f.push_back(RFVLC_FIELD("vlc.semi_angle_half_power", c.scenario.vlc.semi_angle_half_power));
    f.push_back(RFVLC_FIELD("vlc.pd_area", c.scenario.vlc.pd_area));
    f.push_back(RFVLC_FIELD("vlc.fov", c.scenario.vlc.fov));
    f.push_back(RFVLC_FIELD("vlc.optical_filter_gain", c.scenario.vlc.optical_filter_gain));
    f.push_back(RFVLC_FIELD("vlc.concentrator_refractive_index", c.scenario.vlc.concentrator_refractive_index));
    f.push_back(RFVLC_FIELD("vlc.responsivity", c.scenario.vlc.responsivity));
    f.push_back(RFVLC_FIELD("vlc.noise_psd", c.scenario.vlc.noise_psd));
    f.push_back(RFVLC_FIELD("vlc.bandwidth", c.scenario.vlc.bandwidth));

    f.push_back(RFVLC_FIELD("rf.tx_power", c.scenario.rf.tx_power));
    f.push_back(RFVLC_FIELD("rf.path_loss_exponent", c.scenario.rf.path_loss_exponent));
    f.push_back(RFVLC_FIELD("rf.reference_distance", c.scenario.rf.reference_distance));
    f.push_back(RFVLC_FIELD("rf.reference_loss_db", c.scenario.rf.reference_loss_db));
    f.push_back({"rf.fading",
                 [](ExperimentConfig& c, std::string_view v) {
                   if (v == "rayleigh") {
                     c.scenario.rf.fading = RayleighFading{};
                   } else if (v == "nakagami") {
                     if (!std::holds_alternative<NakagamiFading>(c.scenario.rf.fading)) {
                       c.scenario.rf.fading = NakagamiFading{};
                     }
                   } else {
                     throw ValueError{"expected 'rayleigh' or 'nakagami', got '" + std::string(v) + "'"};
                   }
                 },
                 [](const ExperimentConfig& c) -> std::optional<std::string> {
                   return std::holds_alternative<NakagamiFading>(c.scenario.rf.fading) ? "nakagami" : "rayleigh";
                 }});
    f.push_back({"rf.nakagami_m",
                 [](ExperimentConfig& c, std::string_view v) {
                   auto* nak = std::get_if<NakagamiFading>(&c.scenario.rf.fading);
                   if (!nak) throw ValueError{"rf.nakagami_m requires rf.fading = nakagami"};
                   nak->m_shape = to_double(v);
                 },
                 [](const ExperimentConfig& c) -> std::optional<std::string> {
                   const auto* nak = std::get_if<NakagamiFading>(&c.scenario.rf.fading);
                   if (!nak) return std::nullopt;
                   return fmt(nak->m_shape);
                 }});
    f.push_back(RFVLC_FIELD("rf.noise_psd", c.scenario.rf.noise_psd));
    f.push_back(RFVLC_FIELD("rf.noise_figure_db", c.scenario.rf.noise_figure_db));
    f.push_back(RFVLC_FIELD("rf.bandwidth", c.scenario.rf.bandwidth));

    auto list_field = [](std::string key, std::vector<double> SweepSettings::*member) {
      return Field{std::move(key),
                   [member](ExperimentConfig& c, std::string_view v) { c.sweep.*member = to_double_list(v); },
                   [member](const ExperimentConfig& c) -> std::optional<std::string> {
                     return fmt_list(c.sweep.*member);
                   }};
    };
    f.push_back(list_field("sweep.prp_distances", &SweepSettings::prp_distances));
    f.push_back(list_field("sweep.rate_distances", &SweepSettings::rate_distances));
    f.push_back(list_field("sweep.dor_thresholds_ms", &SweepSettings::dor_thresholds_ms));
    f.push_back(list_field("sweep.dor_distances", &SweepSettings::dor_distances));
    f.push_back({"sweep.weathers",
                 [](ExperimentConfig& c, std::string_view v) {
                   c.sweep.weathers.clear();
                   for (auto name : split_list(v)) {
                     c.sweep.weathers.push_back(WeatherCondition::preset(
                         wrap_invalid([&] { return weather_kind_from_string(name); })));
                   }
                 },
                 [](const ExperimentConfig& c) -> std::optional<std::string> {
                   return weather_names(c.sweep.weathers);
                 }});
    f.push_back({"sweep.modes",
                 [](ExperimentConfig& c, std::string_view v) {
                   std::vector<Mode> modes;
                   for (auto name : split_list(v)) modes.push_back(wrap_invalid([&] { return mode_from_string(name); }));
                   c.sweep.modes = std::move(modes);
                 },
                 [](const ExperimentConfig& c) -> std::optional<std::string> {
                   if (!c.sweep.modes) return std::nullopt;
                   return join_names(*c.sweep.modes);
                 }});
    f.push_back({"sweep.n_trials",
                 [](ExperimentConfig& c, std::string_view v) { c.sweep.n_trials = to_u64(v); },
                 [](const ExperimentConfig& c) -> std::optional<std::string> {
                   if (!c.sweep.n_trials) return std::nullopt;
                   return std::to_string(*c.sweep.n_trials);
                 }});
    f.push_back({"sweep.seed",
                 [](ExperimentConfig& c, std::string_view v) { c.sweep.seed = to_u64(v); },
                 [](const ExperimentConfig& c) -> std::optional<std::string> {
                   return std::to_string(c.sweep.seed);
                 }});
    return f;
  }();
  return table;
}

#undef RFVLC_FIELD

bool positive_increasing(const std::vector<double>& v) {
  if (v.empty()) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0) || !std::isfinite(v[i])) return false;
    if (i > 0 && !(v[i - 1] < v[i])) return false;
  }
  return true;
}

std::vector<Violation> validate_sweep(const SweepSettings& s) {
  std::vector<Violation> out;
  auto check = [&](bool ok, const char* field, const char* message) {
    if (!ok) out.push_back({field, message});
  };
  const char* order = "must be positive and strictly increasing";
  check(positive_increasing(s.prp_distances), "sweep.prp_distances", order);
  check(positive_increasing(s.rate_distances), "sweep.rate_distances", order);
  check(positive_increasing(s.dor_thresholds_ms), "sweep.dor_thresholds_ms", order);
  check(positive_increasing(s.dor_distances), "sweep.dor_distances", order);
  check(!s.weathers.empty(), "sweep.weathers", "must not be empty");
  check(!s.modes || !s.modes->empty(), "sweep.modes", "must not be empty");
  check(!s.n_trials || *s.n_trials >= 100, "sweep.n_trials", "must be >= 100");
  return out;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
  std::map<std::string, std::pair<std::string, int>, std::less<>> entries;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (eq == std::string_view::npos) throw ConfigError(where + "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(where + "missing key");
    if (value.empty()) throw ConfigError(where + "missing value for '" + std::string(key) + "'");

    const auto& table = fields();
    if (std::none_of(table.begin(), table.end(), [&](const Field& f) { return f.key == key; })) {
      throw ConfigError(where + "unknown key '" + std::string(key) + "'");
    }
    if (!entries.emplace(std::string(key), std::pair{std::string(value), line_no}).second) {
      throw ConfigError(where + "duplicate key '" + std::string(key) + "'");
    }
  }

  ExperimentConfig config;
  for (const auto& field : fields()) {
    const auto it = entries.find(field.key);
    if (it == entries.end()) continue;
    try {
      field.set(config, it->second.first);
    } catch (const ValueError& e) {
      throw ConfigError("line " + std::to_string(it->second.second) + ": " + field.key + ": " + e.message);
    }
  }

  auto violations = validate(config.scenario);
  for (auto& v : validate_sweep(config.sweep)) violations.push_back(std::move(v));
  if (!violations.empty()) {
    std::string msg = "invalid configuration:";
    for (const auto& v : violations) msg += " " + v.field + " (" + v.message + ");";
    throw ConfigError(msg, std::move(violations));
  }
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  if (path.empty()) return ExperimentConfig{};
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string to_config_text(const ExperimentConfig& config) {
  std::string out;
  for (const auto& field : fields()) {
    if (auto value = field.get(config)) out += field.key + " = " + *value + "\n";
  }
  return out;
}

std::string config_hash(const ExperimentConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_config_text(config)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

SweepSpec base_spec(const ExperimentConfig& config, std::vector<Mode> default_modes,
                    std::uint64_t default_trials) {
  SweepSpec spec;
  spec.weathers = config.sweep.weathers;
  spec.modes = config.sweep.modes.value_or(std::move(default_modes));
  spec.n_trials = config.sweep.n_trials.value_or(default_trials);
  spec.master_seed = config.sweep.seed;
  return spec;
}

}  // namespace

SweepSpec make_prp_spec(const ExperimentConfig& config) {
  SweepSpec spec = base_spec(config, {Mode::pure_vlc, Mode::pure_rf, Mode::la}, kDefaultSweepTrials);
  spec.variable = SweepVariable::distance_r;
  spec.values = config.sweep.prp_distances;
  spec.metrics = {Metric::prp};
  return spec;
}

SweepSpec make_dor_spec(const ExperimentConfig& config) {
  SweepSpec spec = base_spec(config, {Mode::pure_vlc, Mode::pure_rf, Mode::la}, kDefaultDorTrials);
  spec.variable = SweepVariable::t_th;
  for (double ms : config.sweep.dor_thresholds_ms) spec.values.push_back(ms / 1000.0);
  spec.distances = config.sweep.dor_distances;
  spec.metrics = {Metric::dor};
  return spec;
}

SweepSpec make_rate_spec(const ExperimentConfig& config) {
  SweepSpec spec =
      base_spec(config, {Mode::pure_vlc, Mode::pure_rf, Mode::la, Mode::non_la}, kDefaultSweepTrials);
  spec.variable = SweepVariable::distance_r;
  spec.values = config.sweep.rate_distances;
  spec.metrics = {Metric::rate};
  return spec;
}

}  // namespace rfvlc
