#pragma once

#include <cmath>
#include <ostream>

#include "hyperholo/error.hpp"

namespace hyperholo {

/// A point of H: w + x i + y j + z k. The scalar part w carries the
/// real coordinate t.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static constexpr Quaternion real(double t) noexcept { return {t, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion unit_i() noexcept { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion unit_j() noexcept { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion unit_k() noexcept { return {0.0, 0.0, 0.0, 1.0}; }

  [[nodiscard]] constexpr Quaternion imag() const noexcept { return {0.0, x, y, z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) noexcept {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) noexcept {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) noexcept {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) noexcept { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) noexcept { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) noexcept { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) noexcept { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) noexcept { return a *= s; }
constexpr Quaternion operator/(const Quaternion& a, double s) noexcept {
  return {a.w / s, a.x / s, a.y / s, a.z / s};
}

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) noexcept {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion conj(const Quaternion& a) noexcept { return {a.w, -a.x, -a.y, -a.z}; }

constexpr double norm_squared(const Quaternion& a) noexcept {
  return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z;
}

inline double norm(const Quaternion& a) noexcept { return std::sqrt(norm_squared(a)); }

/// Throws Error(zero_divisor) for the zero quaternion.
inline Quaternion inverse(const Quaternion& a) {
  const double n2 = norm_squared(a);
  if (n2 == 0.0) {
    throw Error(ErrorKind::zero_divisor, "inverse of the zero quaternion");
  }
  return {a.w / n2, -a.x / n2, -a.y / n2, -a.z / n2};
}

inline bool is_finite(const Quaternion& a) noexcept {
  return std::isfinite(a.w) && std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// Length of the imaginary part, the radial coordinate r.
inline double imag_norm(const Quaternion& a) noexcept {
  return std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z);
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

}  // namespace hyperholo
