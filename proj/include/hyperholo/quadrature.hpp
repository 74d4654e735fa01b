#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hyperholo/quaternion.hpp"

namespace hyperholo {

/// One-dimensional quadrature rule: sum_k weights[k] * g(nodes[k]).
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;

  [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }
};

/// Gauss-Legendre rule with n nodes on each of `panels` equal sub-intervals of [a, b].
/// Nodes are found by Newton iteration on P_n from the Chebyshev initial guess.
inline Rule gauss_legendre(int n, double a, double b, int panels = 1) {
  if (n < 1 || panels < 1) {
    throw std::invalid_argument("gauss_legendre: node and panel counts must be positive");
  }
  std::vector<double> x(static_cast<std::size_t>(n));
  std::vector<double> w(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) <= 1e-16) {
        break;
      }
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    const double weight = 2.0 / ((1.0 - z * z) * dp * dp);
    x[static_cast<std::size_t>(i)] = -z;
    x[static_cast<std::size_t>(n - 1 - i)] = z;
    w[static_cast<std::size_t>(i)] = weight;
    w[static_cast<std::size_t>(n - 1 - i)] = weight;
  }
  if (n % 2 == 1) {
    x[static_cast<std::size_t>(n / 2)] = 0.0;
  }

  Rule rule;
  rule.nodes.reserve(static_cast<std::size_t>(n * panels));
  rule.weights.reserve(static_cast<std::size_t>(n * panels));
  const double width = (b - a) / panels;
  for (int panel = 0; panel < panels; ++panel) {
    const double lo = a + panel * width;
    const double half_width = 0.5 * width;
    const double mid = lo + half_width;
    for (std::size_t k = 0; k < x.size(); ++k) {
      rule.nodes.push_back(mid + half_width * x[k]);
      rule.weights.push_back(half_width * w[k]);
    }
  }
  return rule;
}

/// Trapezoid rule for 2*pi-periodic integrands: nodes 2*pi*k/n, equal weights.
inline Rule periodic_trapezoid(int n) {
  if (n < 1) {
    throw std::invalid_argument("periodic_trapezoid: node count must be positive");
  }
  Rule rule;
  const double h = 2.0 * std::numbers::pi / n;
  for (int k = 0; k < n; ++k) {
    rule.nodes.push_back(h * k);
    rule.weights.push_back(h);
  }
  return rule;
}

/// Neumaier-compensated running sum; the result depends only on the order of add() calls.
class CompensatedSum {
 public:
  void add(double value) noexcept {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  [[nodiscard]] double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

class QuaternionSum {
 public:
  void add(const Quaternion& q) noexcept {
    w_.add(q.w);
    x_.add(q.x);
    y_.add(q.y);
    z_.add(q.z);
  }

  [[nodiscard]] Quaternion value() const noexcept { return {w_.value(), x_.value(), y_.value(), z_.value()}; }

 private:
  CompensatedSum w_, x_, y_, z_;
};

}  // namespace hyperholo
