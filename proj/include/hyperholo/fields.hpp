#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hyperholo/integrate.hpp"
#include "hyperholo/quaternion.hpp"
#include "hyperholo/sampling.hpp"

namespace hyperholo {

/// Real polynomial in (t, x, y, z) stored as monomials.
class Polynomial4 {
 public:
  struct Term {
    std::array<int, 4> exponents{};
    double coefficient = 0.0;
  };

  Polynomial4() = default;
  explicit Polynomial4(std::vector<Term> terms) : terms_(std::move(terms)) {}

  /// Every monomial of total degree <= degree with coefficients uniform in [-1, 1].
  static Polynomial4 random(int degree, Rng& rng) {
    std::vector<Term> terms;
    for (int a = 0; a <= degree; ++a)
      for (int b = 0; a + b <= degree; ++b)
        for (int c = 0; a + b + c <= degree; ++c)
          for (int d = 0; a + b + c + d <= degree; ++d) terms.push_back({{a, b, c, d}, rng.uniform(-1.0, 1.0)});
    return Polynomial4(std::move(terms));
  }

  [[nodiscard]] double operator()(const Quaternion& p) const noexcept {
    const std::array<double, 4> v = {p.w, p.x, p.y, p.z};
    double acc = 0.0;
    for (const Term& term : terms_) {
      double m = term.coefficient;
      for (std::size_t a = 0; a < 4; ++a) m *= power(v[a], term.exponents[a]);
      acc += m;
    }
    return acc;
  }

  /// Exact partial derivative along axis (0 = t, 1 = x, 2 = y, 3 = z).
  [[nodiscard]] Polynomial4 derivative(int axis) const {
    std::vector<Term> out;
    const auto idx = static_cast<std::size_t>(axis);
    for (const Term& term : terms_) {
      if (term.exponents[idx] == 0) continue;
      Term d = term;
      d.coefficient *= term.exponents[idx];
      d.exponents[idx] -= 1;
      out.push_back(d);
    }
    return Polynomial4(std::move(out));
  }

  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }

 private:
  static double power(double x, int n) noexcept {
    double acc = 1.0;
    for (int k = 0; k < n; ++k) acc *= x;
    return acc;
  }

  std::vector<Term> terms_;
};

/// Four quaternion-valued polynomial fields with exact divergence.
inline DivergenceField random_polynomial_field(int degree, Rng& rng) {
  // components[a][c]: component c (w, x, y, z) of f_a
  std::array<std::array<Polynomial4, 4>, 4> comps;
  std::array<std::array<Polynomial4, 4>, 4> derivs;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t c = 0; c < 4; ++c) {
      comps[a][c] = Polynomial4::random(degree, rng);
      derivs[a][c] = comps[a][c].derivative(static_cast<int>(a));
    }
  }
  DivergenceField field;
  field.components = [comps](const Quaternion& p) {
    std::array<Quaternion, 4> out;
    for (std::size_t a = 0; a < 4; ++a) out[a] = {comps[a][0](p), comps[a][1](p), comps[a][2](p), comps[a][3](p)};
    return out;
  };
  field.divergence = [derivs](const Quaternion& p) {
    Quaternion acc;
    for (std::size_t a = 0; a < 4; ++a) acc += {derivs[a][0](p), derivs[a][1](p), derivs[a][2](p), derivs[a][3](p)};
    return acc;
  };
  return field;
}

}  // namespace hyperholo
