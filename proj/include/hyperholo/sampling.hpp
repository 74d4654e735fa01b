#pragma once

#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hyperholo/coords.hpp"
#include "hyperholo/quaternion.hpp"

namespace hyperholo {

/// Reproducible uniform deviates. The mapping from raw 64-bit output to
/// [0, 1) is spelled out so that sample sets do not depend on the standard
/// library's distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

/// Box in the (t, r, alpha, beta) chart from which check points are drawn.
/// Defaults stay away from r = 0 and from the beta poles.
struct SampleWindow {
  double t_min = -2.0;
  double t_max = 2.0;
  double r_min = 0.5;
  double r_max = 3.0;
  double alpha_min = 0.2;
  double alpha_max = 2.0 * std::numbers::pi - 0.2;
  double beta_min = 0.3;
  double beta_max = std::numbers::pi - 0.3;
  int count = 200;
  std::uint64_t seed = 20240611;
};

inline std::vector<Quaternion> sample_points(const SampleWindow& window) {
  Rng rng(window.seed);
  std::vector<Quaternion> points;
  points.reserve(static_cast<std::size_t>(window.count));
  for (int k = 0; k < window.count; ++k) {
    SphericalCoords c;
    c.t = rng.uniform(window.t_min, window.t_max);
    c.r = rng.uniform(window.r_min, window.r_max);
    c.alpha = rng.uniform(window.alpha_min, window.alpha_max);
    c.beta = rng.uniform(window.beta_min, window.beta_max);
    points.push_back(from_spherical(c));
  }
  return points;
}

}  // namespace hyperholo
