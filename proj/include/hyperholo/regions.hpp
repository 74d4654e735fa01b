#pragma once

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "hyperholo/error.hpp"
#include "hyperholo/quaternion.hpp"

namespace hyperholo {

/// Solid torus-like body {(t - t0)^2 + (r - r0)^2 <= rho^2} swept over all
/// directions iota; every point has r >= r0 - rho > 0.
struct TorusRegion {
  double t0 = 0.0;
  double r0 = 2.0;
  double rho = 1.0;
};

/// Euclidean 4-ball of radius rho about a centre off the real axis.
struct OffsetSphereRegion {
  Quaternion center{0.0, 2.0, 0.0, 0.0};
  double rho = 1.0;
};

using Region = std::variant<TorusRegion, OffsetSphereRegion>;

inline TorusRegion make_torus(double t0, double r0, double rho) {
  if (!(rho > 0.0) || !(rho < r0)) {
    throw Error(ErrorKind::region_touches_real_axis, "torus needs 0 < rho < r0");
  }
  return {t0, r0, rho};
}

inline OffsetSphereRegion make_offset_sphere(const Quaternion& center, double rho) {
  if (!(rho > 0.0) || !(rho < imag_norm(center))) {
    throw Error(ErrorKind::region_touches_real_axis, "offset sphere needs 0 < rho < r(center)");
  }
  return {center, rho};
}

/// Smallest r over the closed region.
inline double min_radius(const Region& region) {
  return std::visit(
      [](const auto& g) -> double {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, TorusRegion>) {
          return g.r0 - g.rho;
        } else {
          return imag_norm(g.center) - g.rho;
        }
      },
      region);
}

inline std::string region_text(const Region& region) {
  std::ostringstream os;
  os.precision(17);
  std::visit(
      [&os](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, TorusRegion>) {
          os << "torus(" << g.t0 << "," << g.r0 << "," << g.rho << ")";
        } else {
          os << "sphere(" << g.center.w << "," << g.center.x << "," << g.center.y << "," << g.center.z << ","
             << g.rho << ")";
        }
      },
      region);
  return os.str();
}

namespace detail {

inline std::vector<double> parse_real_list(std::string_view text, char sep, std::string_view context) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    std::string_view token = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::config, "bad number '" + std::string(token) + "' in '" + std::string(context) + "'");
    }
    out.push_back(value);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses "torus(t0,r0,rho)" or "sphere(w,x,y,z,rho)".
inline Region parse_region(std::string_view text) {
  const std::string_view s = detail::trim(text);
  const auto open = s.find('(');
  if (open == std::string_view::npos || s.back() != ')') {
    throw Error(ErrorKind::config, "bad region '" + std::string(s) + "'");
  }
  const std::string_view kind = detail::trim(s.substr(0, open));
  const auto args = detail::parse_real_list(s.substr(open + 1, s.size() - open - 2), ',', s);
  if (kind == "torus" && args.size() == 3) {
    return make_torus(args[0], args[1], args[2]);
  }
  if (kind == "sphere" && args.size() == 5) {
    return make_offset_sphere({args[0], args[1], args[2], args[3]}, args[4]);
  }
  throw Error(ErrorKind::config, "bad region '" + std::string(s) + "'");
}

/// Node counts: trapezoid in the periodic directions (theta, alpha), composite
/// Gauss-Legendre in the bounded ones (beta and the sphere angles, radial).
///
/// The defaults put the worst built-in case (reciprocal, nearest pole at
/// distance 1 from the boundary) below 1e-12 on both region families.
struct QuadratureSpec {
  int n_theta = 64;
  int n_alpha = 32;
  int n_beta = 16;
  int n_radial = 16;
  int panels = 2;

  friend bool operator==(const QuadratureSpec&, const QuadratureSpec&) = default;

  [[nodiscard]] QuadratureSpec doubled() const { return {2 * n_theta, 2 * n_alpha, 2 * n_beta, 2 * n_radial, panels}; }
};

inline void validate(const QuadratureSpec& spec) {
  if (spec.n_theta < 4 || spec.n_alpha < 4 || spec.n_beta < 4 || spec.n_radial < 4 || spec.panels < 1) {
    throw Error(ErrorKind::config, "quadrature node counts must be >= 4");
  }
}

inline std::string spec_text(const QuadratureSpec& spec) {
  std::string out = std::to_string(spec.n_theta) + "x" + std::to_string(spec.n_alpha) + "x" +
                    std::to_string(spec.n_beta) + "x" + std::to_string(spec.n_radial);
  if (spec.panels != 1) {
    out += "p" + std::to_string(spec.panels);
  }
  return out;
}

/// Parses "n_theta,n_alpha,n_beta,n_radial[,panels]".
inline QuadratureSpec parse_quadrature_spec(std::string_view text) {
  const auto values = detail::parse_real_list(detail::trim(text), ',', text);
  if (values.size() != 4 && values.size() != 5) {
    throw Error(ErrorKind::config, "quadrature spec needs 4 or 5 counts: '" + std::string(text) + "'");
  }
  for (double v : values) {
    if (v != std::floor(v)) {
      throw Error(ErrorKind::config, "quadrature counts must be integers: '" + std::string(text) + "'");
    }
  }
  QuadratureSpec spec{static_cast<int>(values[0]), static_cast<int>(values[1]), static_cast<int>(values[2]),
                      static_cast<int>(values[3]), values.size() == 5 ? static_cast<int>(values[4]) : 1};
  validate(spec);
  return spec;
}

}  // namespace hyperholo
