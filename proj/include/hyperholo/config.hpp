#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "hyperholo/error.hpp"
#include "hyperholo/regions.hpp"
#include "hyperholo/sampling.hpp"
#include "hyperholo/verify.hpp"

namespace hyperholo {

/// Batch configuration read from a plain key = value file.
///
/// List-valued keys take ';'-separated items (generator texts contain commas)
/// and may be repeated to append. Lines starting with '#' are comments.
struct RunConfig {
  std::vector<std::string> generators;
  /// Generators expected to violate the hyperholomorphicity criteria.
  std::vector<std::string> expect_fail;
  std::vector<Region> regions = {TorusRegion{0.0, 2.0, 1.0}, OffsetSphereRegion{{0.0, 2.0, 0.0, 0.0}, 1.0}};
  QuadratureSpec quadrature;
  std::vector<QuadratureSpec> convergence_specs = {{8, 8, 8, 8, 1}, {16, 16, 16, 16, 1}, {32, 32, 32, 32, 1}};
  std::vector<std::string> suites = {"all"};
  SampleWindow window;
  Tolerances tolerances;
  std::string output_dir = "reports";
  std::uint64_t seed = SampleWindow{}.seed;
  int gauss_fields = 20;
  int gauss_degree = 3;
  bool timestamp = true;
};

namespace detail {

inline std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    const std::size_t end = value.find(';', start);
    const std::string_view item = trim(value.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                                           : end - start));
    if (!item.empty()) out.emplace_back(item);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

inline double parse_real(std::string_view value, std::string_view key) {
  const auto values = parse_real_list(value, ',', key);
  if (values.size() != 1) {
    throw Error(ErrorKind::config, "expected one number for '" + std::string(key) + "'");
  }
  return values[0];
}

inline std::pair<double, double> parse_range(std::string_view value, std::string_view key) {
  const auto values = parse_real_list(value, ',', key);
  if (values.size() != 2 || !(values[0] < values[1])) {
    throw Error(ErrorKind::config, "expected 'lo,hi' with lo < hi for '" + std::string(key) + "'");
  }
  return {values[0], values[1]};
}

inline std::uint64_t parse_seed(std::string_view value) {
  std::uint64_t seed = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), seed);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(ErrorKind::config, "bad seed '" + std::string(value) + "'");
  }
  return seed;
}

inline bool parse_bool(std::string_view value, std::string_view key) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw Error(ErrorKind::config, "expected true/false for '" + std::string(key) + "'");
}

inline int parse_count(std::string_view value, std::string_view key, int minimum) {
  const double v = parse_real(value, key);
  if (v != static_cast<int>(v) || v < minimum) {
    throw Error(ErrorKind::config, "'" + std::string(key) + "' must be an integer >= " + std::to_string(minimum));
  }
  return static_cast<int>(v);
}

}  // namespace detail

inline void set_seed(RunConfig& config, std::uint64_t seed) {
  config.seed = seed;
  config.window.seed = seed;
}

/// Applies one key = value assignment.
inline void apply_setting(RunConfig& config, std::string_view key, std::string_view value, bool& regions_set) {
  using namespace detail;
  if (key == "generators" || key == "generator") {
    for (auto& g : split_list(value)) config.generators.push_back(g);
  } else if (key == "expect_fail") {
    for (auto& g : split_list(value)) config.expect_fail.push_back(g);
  } else if (key == "regions" || key == "region") {
    if (!regions_set) config.regions.clear();
    regions_set = true;
    for (auto& r : split_list(value)) config.regions.push_back(parse_region(r));
  } else if (key == "quadrature") {
    config.quadrature = parse_quadrature_spec(value);
  } else if (key == "convergence") {
    config.convergence_specs.clear();
    for (auto& s : split_list(value)) config.convergence_specs.push_back(parse_quadrature_spec(s));
  } else if (key == "suites") {
    config.suites.clear();
    for (auto& s : split_list(value)) {
      std::size_t start = 0;
      while (start <= s.size()) {
        const std::size_t end = s.find(',', start);
        const auto item = trim(std::string_view(s).substr(start, end == std::string::npos ? std::string::npos
                                                                                            : end - start));
        if (!item.empty()) config.suites.emplace_back(item);
        if (end == std::string::npos) break;
        start = end + 1;
      }
    }
  } else if (key == "window.t") {
    std::tie(config.window.t_min, config.window.t_max) = parse_range(value, key);
  } else if (key == "window.r") {
    std::tie(config.window.r_min, config.window.r_max) = parse_range(value, key);
    if (!(config.window.r_min > 0.0)) throw Error(ErrorKind::config, "window.r must be bounded away from 0");
  } else if (key == "window.alpha") {
    std::tie(config.window.alpha_min, config.window.alpha_max) = parse_range(value, key);
  } else if (key == "window.beta") {
    std::tie(config.window.beta_min, config.window.beta_max) = parse_range(value, key);
    if (!(config.window.beta_min > 0.0 && config.window.beta_max < std::numbers::pi)) {
      throw Error(ErrorKind::config, "window.beta must lie inside (0, pi)");
    }
  } else if (key == "window.count") {
    config.window.count = parse_count(value, key, 1);
  } else if (key == "seed") {
    set_seed(config, parse_seed(value));
  } else if (key == "tol.first") {
    config.tolerances.first = parse_real(value, key);
  } else if (key == "tol.second") {
    config.tolerances.second = parse_real(value, key);
  } else if (key == "tol.third") {
    config.tolerances.third = parse_real(value, key);
  } else if (key == "tol.pass_band") {
    config.tolerances.pass_band = parse_real(value, key);
  } else if (key == "tol.fail_band") {
    config.tolerances.fail_band = parse_real(value, key);
  } else if (key == "tol.integral_abs") {
    config.tolerances.integral_abs = parse_real(value, key);
  } else if (key == "tol.gauss") {
    config.tolerances.gauss_rel = parse_real(value, key);
  } else if (key == "out") {
    config.output_dir = std::string(value);
  } else if (key == "gauss.fields") {
    config.gauss_fields = parse_count(value, key, 1);
  } else if (key == "gauss.degree") {
    config.gauss_degree = parse_count(value, key, 0);
  } else if (key == "timestamp") {
    config.timestamp = parse_bool(value, key);
  } else {
    throw Error(ErrorKind::config, "unknown key '" + std::string(key) + "'");
  }
}

inline RunConfig parse_config(std::string_view text) {
  RunConfig config;
  bool regions_set = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view s = detail::trim(line);
    if (s.empty() || s.front() == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::config, "line " + std::to_string(line_no) + ": expected key = value");
    }
    apply_setting(config, detail::trim(s.substr(0, eq)), detail::trim(s.substr(eq + 1)), regions_set);
  }
  return config;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::config, "cannot read config '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace hyperholo
