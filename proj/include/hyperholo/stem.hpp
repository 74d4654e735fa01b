#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperholo/error.hpp"

namespace hyperholo {

using Complex = std::complex<double>;

/// A holomorphic function of one complex variable with a closed-form
/// derivative. Stems are lifted to quaternionic functions by replacing the
/// imaginary unit with iota.
class Stem {
 public:
  enum class Kind { power, polynomial, exp, reciprocal, constant };

  static Stem power(int n) {
    if (n < 0) {
      throw Error(ErrorKind::parse, "power exponent must be >= 0, got " + std::to_string(n));
    }
    Stem s(Kind::power);
    s.exponent_ = n;
    return s;
  }

  /// Real-coefficient polynomial c0 + c1 z + ... + cn z^n.
  static Stem polynomial(std::vector<double> coefficients) {
    if (coefficients.empty()) {
      coefficients.push_back(0.0);
    }
    Stem s(Kind::polynomial);
    s.coefficients_ = std::move(coefficients);
    return s;
  }

  static Stem exp() { return Stem(Kind::exp); }
  static Stem reciprocal() { return Stem(Kind::reciprocal); }

  static Stem constant(Complex c) {
    Stem s(Kind::constant);
    s.constant_ = c;
    return s;
  }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] int exponent() const noexcept { return exponent_; }

  [[nodiscard]] bool is_constant() const noexcept {
    switch (kind_) {
      case Kind::constant: return true;
      case Kind::power: return exponent_ == 0;
      case Kind::polynomial: return coefficients_.size() <= 1;
      default: return false;
    }
  }

  /// True when the stem maps the real line to itself, i.e. the lift has v == 0 on the real axis.
  [[nodiscard]] bool real_on_real_axis() const noexcept {
    return kind_ != Kind::constant || constant_.imag() == 0.0;
  }

  [[nodiscard]] Complex value(Complex z) const {
    switch (kind_) {
      case Kind::power: return integer_power(z, exponent_);
      case Kind::polynomial: {
        Complex acc(coefficients_.back(), 0.0);
        for (std::size_t k = coefficients_.size() - 1; k-- > 0;) {
          acc = acc * z + coefficients_[k];
        }
        return acc;
      }
      case Kind::exp: return complex_exp(z);
      case Kind::reciprocal: {
        const double d = pole_guard(z);
        return {z.real() / d, -z.imag() / d};
      }
      case Kind::constant: return constant_;
    }
    return {};
  }

  [[nodiscard]] Complex derivative(Complex z) const {
    switch (kind_) {
      case Kind::power:
        if (exponent_ == 0) {
          return {0.0, 0.0};
        }
        return static_cast<double>(exponent_) * integer_power(z, exponent_ - 1);
      case Kind::polynomial: {
        const std::size_t n = coefficients_.size();
        if (n <= 1) {
          return {0.0, 0.0};
        }
        Complex acc(static_cast<double>(n - 1) * coefficients_[n - 1], 0.0);
        for (std::size_t k = n - 1; k-- > 1;) {
          acc = acc * z + static_cast<double>(k) * coefficients_[k];
        }
        return acc;
      }
      case Kind::exp: return complex_exp(z);
      case Kind::reciprocal: {
        // -1/z^2 = -conj(z)^2 / |z|^4
        const double d = pole_guard(z);
        const Complex zc = std::conj(z);
        return -(zc * zc) / (d * d);
      }
      case Kind::constant: return {0.0, 0.0};
    }
    return {};
  }

  [[nodiscard]] std::string name() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind_) {
      case Kind::power: os << "power:" << exponent_; break;
      case Kind::polynomial:
        os << "poly:";
        for (std::size_t k = 0; k < coefficients_.size(); ++k) {
          os << (k ? "/" : "") << coefficients_[k];
        }
        break;
      case Kind::exp: os << "exp"; break;
      case Kind::reciprocal: os << "reciprocal"; break;
      case Kind::constant:
        os << "constant:" << constant_.real();
        if (constant_.imag() != 0.0) {
          os << "/" << constant_.imag();
        }
        break;
    }
    return os.str();
  }

 private:
  explicit Stem(Kind kind) : kind_(kind) {}

  static Complex integer_power(Complex z, int n) {
    Complex acc(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
      acc = acc * z;
    }
    return acc;
  }

  static Complex complex_exp(Complex z) {
    const double e = std::exp(z.real());
    return {e * std::cos(z.imag()), e * std::sin(z.imag())};
  }

  static double pole_guard(Complex z) {
    const double d = z.real() * z.real() + z.imag() * z.imag();
    if (d == 0.0) {
      throw Error(ErrorKind::pole_singularity, "reciprocal evaluated at t = r = 0");
    }
    return d;
  }

  Kind kind_;
  int exponent_ = 0;
  std::vector<double> coefficients_;
  Complex constant_{0.0, 0.0};
};

}  // namespace hyperholo
