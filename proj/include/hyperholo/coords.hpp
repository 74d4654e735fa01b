#pragma once

#include <cmath>
#include <numbers>

#include "hyperholo/error.hpp"
#include "hyperholo/quaternion.hpp"

namespace hyperholo {

/// The (t, r, alpha, beta) chart: p = t + r * iota(alpha, beta).
///
/// alpha is the azimuth in [0, 2pi), beta the polar angle in [0, pi].
/// Conversions are total: on the real axis (r == 0) both angles are 0, and
/// on the poles (beta in {0, pi}) alpha is 0.
struct SphericalCoords {
  double t = 0.0;
  double r = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

inline SphericalCoords to_spherical(const Quaternion& p) noexcept {
  SphericalCoords c;
  c.t = p.w;
  const double rho_xy = std::hypot(p.x, p.y);
  c.r = std::hypot(rho_xy, p.z);
  if (c.r == 0.0) {
    return c;
  }
  c.beta = std::atan2(rho_xy, p.z);
  if (rho_xy == 0.0) {
    return c;
  }
  double a = std::atan2(p.y, p.x);
  if (a < 0.0) {
    a += 2.0 * std::numbers::pi;
    if (a >= 2.0 * std::numbers::pi) {
      a = 0.0;
    }
  }
  c.alpha = a;
  return c;
}

/// Unit imaginary iota(alpha, beta) = (cos a sin b) i + (sin a sin b) j + (cos b) k.
inline Quaternion iota(double alpha, double beta) noexcept {
  const double sb = std::sin(beta);
  return {0.0, std::cos(alpha) * sb, std::sin(alpha) * sb, std::cos(beta)};
}

inline Quaternion iota_alpha(double alpha, double beta) noexcept {
  const double sb = std::sin(beta);
  return {0.0, -std::sin(alpha) * sb, std::cos(alpha) * sb, 0.0};
}

inline Quaternion iota_beta(double alpha, double beta) noexcept {
  const double cb = std::cos(beta);
  return {0.0, std::cos(alpha) * cb, std::sin(alpha) * cb, -std::sin(beta)};
}

/// (iota_alpha)^-1 = -iota_alpha / sin^2(beta). Undefined on the poles.
inline Quaternion inv_iota_alpha(double alpha, double beta) {
  const double sb = std::sin(beta);
  if (sb == 0.0) {
    throw Error(ErrorKind::pole_singularity, "iota_alpha vanishes at sin(beta) == 0");
  }
  return -iota_alpha(alpha, beta) / (sb * sb);
}

/// (iota_beta)^-1 = -iota_beta, since iota_beta is a unit imaginary.
inline Quaternion inv_iota_beta(double alpha, double beta) noexcept { return -iota_beta(alpha, beta); }

inline Quaternion from_spherical(const SphericalCoords& c) noexcept {
  const Quaternion unit = iota(c.alpha, c.beta);
  return {c.t, c.r * unit.x, c.r * unit.y, c.r * unit.z};
}

/// Jacobian r^2 sin(beta) of (t, r, alpha, beta) -> (t, x, y, z).
inline double volume_weight(const SphericalCoords& c) noexcept { return c.r * c.r * std::sin(c.beta); }

}  // namespace hyperholo
