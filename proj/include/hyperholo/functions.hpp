#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>

#include "hyperholo/coords.hpp"
#include "hyperholo/error.hpp"
#include "hyperholo/quaternion.hpp"
#include "hyperholo/stem.hpp"

namespace hyperholo {

/// Values and first chart partials of a complex-like function f = u + iota v,
/// packed as complex numbers u + i v. The (u, v) algebra is the complex one,
/// so sums, products and inverses act on these entries directly.
struct ChartJet {
  Complex value;
  Complex d_t;
  Complex d_r;
  Complex d_alpha;
  Complex d_beta;

  [[nodiscard]] double u() const noexcept { return value.real(); }
  [[nodiscard]] double v() const noexcept { return value.imag(); }
  [[nodiscard]] double u_t() const noexcept { return d_t.real(); }
  [[nodiscard]] double v_t() const noexcept { return d_t.imag(); }
  [[nodiscard]] double u_r() const noexcept { return d_r.real(); }
  [[nodiscard]] double v_r() const noexcept { return d_r.imag(); }
  [[nodiscard]] double u_alpha() const noexcept { return d_alpha.real(); }
  [[nodiscard]] double v_alpha() const noexcept { return d_alpha.imag(); }
  [[nodiscard]] double u_beta() const noexcept { return d_beta.real(); }
  [[nodiscard]] double v_beta() const noexcept { return d_beta.imag(); }
};

enum class PartialsMethod { closed_form, finite_difference };

/// Central-difference step used for the partials of custom generators.
inline constexpr double kCustomPartialsStep = 1e-4;

struct PairTraits {
  PartialsMethod method = PartialsMethod::closed_form;
  /// u and v depend on (t, r) only.
  bool intrinsic = true;
  /// Periodic in alpha, hence a well-defined function on full surfaces.
  bool single_valued = true;
  /// v == 0 identically, so the function is defined on the real axis.
  bool real_axis_ok = false;
};

/// A complex-like function f = u + iota v, given by its (u, v) fields in
/// the (t, r, alpha, beta) chart and their first partials.
///
/// Immutable after construction; copies share the underlying callables.
class ComplexLikePair {
 public:
  using FieldFn = std::function<Complex(const SphericalCoords&)>;
  using JetFn = std::function<ChartJet(const SphericalCoords&)>;

  ComplexLikePair(std::string name, FieldFn field, JetFn jet, PairTraits traits)
      : name_(std::make_shared<const std::string>(std::move(name))),
        field_(std::make_shared<const FieldFn>(std::move(field))),
        jet_(std::make_shared<const JetFn>(std::move(jet))),
        traits_(traits) {}

  [[nodiscard]] const std::string& name() const noexcept { return *name_; }
  [[nodiscard]] const PairTraits& traits() const noexcept { return traits_; }
  [[nodiscard]] bool intrinsic() const noexcept { return traits_.intrinsic; }
  [[nodiscard]] bool single_valued() const noexcept { return traits_.single_valued; }
  [[nodiscard]] PartialsMethod method() const noexcept { return traits_.method; }

  /// u + i v at chart point c.
  [[nodiscard]] Complex field(const SphericalCoords& c) const { return (*field_)(c); }
  [[nodiscard]] ChartJet jet(const SphericalCoords& c) const { return (*jet_)(c); }

 private:
  std::shared_ptr<const std::string> name_;
  std::shared_ptr<const ComplexLikePair::FieldFn> field_;
  std::shared_ptr<const ComplexLikePair::JetFn> jet_;
  PairTraits traits_;
};

/// f(p) = u + iota v as a quaternion. iota is taken as Im(p)/r, which is
/// iota(alpha, beta) of to_spherical(p) up to rounding.
inline Quaternion eval(const ComplexLikePair& f, const Quaternion& p) {
  const SphericalCoords c = to_spherical(p);
  if (c.r == 0.0) {
    if (!f.traits().real_axis_ok) {
      throw Error(ErrorKind::real_axis_evaluation, f.name() + " at r == 0");
    }
    return Quaternion::real(f.field(c).real());
  }
  const Complex uv = f.field(c);
  const double s = uv.imag() / c.r;
  return {uv.real(), s * p.x, s * p.y, s * p.z};
}

// ---------------------------------------------------------------------------
// Generators

/// Intrinsic lift of a stem: u + i v = S(t + i r).
inline ComplexLikePair make_intrinsic(const Stem& stem) {
  PairTraits traits;
  traits.real_axis_ok = stem.is_constant() && stem.real_on_real_axis();
  auto field = [stem](const SphericalCoords& c) { return stem.value({c.t, c.r}); };
  auto jet = [stem](const SphericalCoords& c) {
    const Complex z(c.t, c.r);
    const Complex ds = stem.derivative(z);
    ChartJet j;
    j.value = stem.value(z);
    j.d_t = ds;
    j.d_r = Complex(-ds.imag(), ds.real());  // i * S'
    return j;
  };
  return ComplexLikePair(stem.name(), std::move(field), std::move(jet), traits);
}

inline ComplexLikePair make_power(int n) { return make_intrinsic(Stem::power(n)); }
inline ComplexLikePair make_exp() { return make_intrinsic(Stem::exp()); }
inline ComplexLikePair make_reciprocal() { return make_intrinsic(Stem::reciprocal()); }
inline ComplexLikePair make_constant(double c) { return make_intrinsic(Stem::constant({c, 0.0})); }

/// f = iota (u = 0, v = 1).
inline ComplexLikePair make_iota() {
  auto pair = make_intrinsic(Stem::constant({0.0, 1.0}));
  return ComplexLikePair("iota", [pair](const SphericalCoords& c) { return pair.field(c); },
                         [pair](const SphericalCoords& c) { return pair.jet(c); }, pair.traits());
}

/// Non-example u = t, v = -r (quaternionic conjugate of p).
inline ComplexLikePair make_conjugate_like() {
  auto field = [](const SphericalCoords& c) { return Complex(c.t, -c.r); };
  auto jet = [](const SphericalCoords& c) {
    ChartJet j;
    j.value = Complex(c.t, -c.r);
    j.d_t = Complex(1.0, 0.0);
    j.d_r = Complex(0.0, -1.0);
    return j;
  };
  return ComplexLikePair("conj", std::move(field), std::move(jet), PairTraits{});
}

/// Non-example u = r, v = 0.
inline ComplexLikePair make_radial() {
  auto field = [](const SphericalCoords& c) { return Complex(c.r, 0.0); };
  auto jet = [](const SphericalCoords& c) {
    ChartJet j;
    j.value = Complex(c.r, 0.0);
    j.d_r = Complex(1.0, 0.0);
    return j;
  };
  return ComplexLikePair("radial", std::move(field), std::move(jet), PairTraits{});
}

/// u = 1/r^2, v = 0: the scaling factor of Cullen's lemma.
inline ComplexLikePair make_inverse_r_squared() {
  auto field = [](const SphericalCoords& c) { return Complex(1.0 / (c.r * c.r), 0.0); };
  auto jet = [](const SphericalCoords& c) {
    ChartJet j;
    const double inv_r = 1.0 / c.r;
    j.value = Complex(inv_r * inv_r, 0.0);
    j.d_r = Complex(-2.0 * inv_r * inv_r * inv_r, 0.0);
    return j;
  };
  return ComplexLikePair("r^-2", std::move(field), std::move(jet), PairTraits{});
}

/// Mercator coordinate ln tan(beta/2); d/dbeta = 1/sin(beta).
inline double mercator(double beta) {
  if (!(beta > 0.0 && beta < std::numbers::pi) || std::sin(beta) == 0.0) {
    throw Error(ErrorKind::mercator_singularity, "beta outside (0, pi)");
  }
  return std::log(std::tan(0.5 * beta));
}

/// u + i v = F(t + i r) * G(alpha + i ln tan(beta/2)).
///
/// Both factors are holomorphic in their own variable, so each CR pair holds.
/// Unless G is constant the result depends on alpha without being periodic,
/// so it is flagged as not single-valued ("local").
inline ComplexLikePair make_product_form(const Stem& outer, const Stem& angular) {
  if (angular.is_constant()) {
    const Complex g = angular.value({0.0, 0.0});
    auto lift = make_intrinsic(outer);
    auto field = [lift, g](const SphericalCoords& c) { return lift.field(c) * g; };
    auto jet = [lift, g](const SphericalCoords& c) {
      ChartJet j = lift.jet(c);
      j.value *= g;
      j.d_t *= g;
      j.d_r *= g;
      return j;
    };
    PairTraits traits = lift.traits();
    traits.real_axis_ok = traits.real_axis_ok && g.imag() == 0.0;
    return ComplexLikePair("prodform(" + outer.name() + "," + angular.name() + ")", std::move(field),
                           std::move(jet), traits);
  }
  auto field = [outer, angular](const SphericalCoords& c) {
    return outer.value({c.t, c.r}) * angular.value({c.alpha, mercator(c.beta)});
  };
  auto jet = [outer, angular](const SphericalCoords& c) {
    const Complex w1(c.t, c.r);
    const Complex w2(c.alpha, mercator(c.beta));
    const Complex f = outer.value(w1);
    const Complex df = outer.derivative(w1);
    const Complex g = angular.value(w2);
    const Complex dg = angular.derivative(w2);
    const Complex i(0.0, 1.0);
    ChartJet j;
    j.value = f * g;
    j.d_t = df * g;
    j.d_r = i * df * g;
    j.d_alpha = f * dg;
    j.d_beta = i * f * dg / std::sin(c.beta);
    return j;
  };
  PairTraits traits;
  traits.intrinsic = false;
  traits.single_valued = false;
  return ComplexLikePair("prodform(" + outer.name() + "," + angular.name() + ")", std::move(field),
                         std::move(jet), traits);
}

/// A function known only through its (u, v) fields. Partials come from
/// fourth-order central differences with step kCustomPartialsStep.
inline ComplexLikePair make_custom(std::string name, ComplexLikePair::FieldFn field, bool intrinsic,
                                   bool single_valued = true) {
  auto jet = [field, intrinsic](const SphericalCoords& c) {
    constexpr double h = kCustomPartialsStep;
    auto diff = [&](auto shift) {
      return (field(shift(-2.0 * h)) - 8.0 * field(shift(-h)) + 8.0 * field(shift(h)) - field(shift(2.0 * h))) /
             (12.0 * h);
    };
    ChartJet j;
    j.value = field(c);
    j.d_t = diff([&](double s) { return SphericalCoords{c.t + s, c.r, c.alpha, c.beta}; });
    j.d_r = diff([&](double s) { return SphericalCoords{c.t, c.r + s, c.alpha, c.beta}; });
    if (!intrinsic) {
      j.d_alpha = diff([&](double s) { return SphericalCoords{c.t, c.r, c.alpha + s, c.beta}; });
      j.d_beta = diff([&](double s) { return SphericalCoords{c.t, c.r, c.alpha, c.beta + s}; });
    }
    return j;
  };
  PairTraits traits;
  traits.method = PartialsMethod::finite_difference;
  traits.intrinsic = intrinsic;
  traits.single_valued = single_valued;
  return ComplexLikePair(std::move(name), std::move(field), std::move(jet), traits);
}

/// Re-expresses f as a custom generator so its partials go through the
/// finite-difference fallback.
inline ComplexLikePair as_finite_difference(const ComplexLikePair& f) {
  return make_custom("fd(" + f.name() + ")", [f](const SphericalCoords& c) { return f.field(c); }, f.intrinsic(),
                     f.single_valued());
}

// ---------------------------------------------------------------------------
// Combinators: pointwise complex arithmetic on (u, v).

namespace detail {

inline PairTraits combine(const PairTraits& a, const PairTraits& b) {
  PairTraits t;
  t.method = (a.method == PartialsMethod::closed_form && b.method == PartialsMethod::closed_form)
                 ? PartialsMethod::closed_form
                 : PartialsMethod::finite_difference;
  t.intrinsic = a.intrinsic && b.intrinsic;
  t.single_valued = a.single_valued && b.single_valued;
  t.real_axis_ok = a.real_axis_ok && b.real_axis_ok;
  return t;
}

inline Complex guarded_inverse(Complex w, const std::string& name) {
  const double d = w.real() * w.real() + w.imag() * w.imag();
  if (d == 0.0) {
    throw Error(ErrorKind::zero_function_value, "inverse of " + name + " where u^2 + v^2 == 0");
  }
  return {w.real() / d, -w.imag() / d};
}

}  // namespace detail

inline ComplexLikePair cl_add(const ComplexLikePair& f, const ComplexLikePair& g) {
  auto field = [f, g](const SphericalCoords& c) { return f.field(c) + g.field(c); };
  auto jet = [f, g](const SphericalCoords& c) {
    const ChartJet a = f.jet(c);
    const ChartJet b = g.jet(c);
    return ChartJet{a.value + b.value, a.d_t + b.d_t, a.d_r + b.d_r, a.d_alpha + b.d_alpha, a.d_beta + b.d_beta};
  };
  return ComplexLikePair("add(" + f.name() + "," + g.name() + ")", std::move(field), std::move(jet),
                         detail::combine(f.traits(), g.traits()));
}

/// Real multiple a * f.
inline ComplexLikePair cl_scale(double a, const ComplexLikePair& f) {
  auto field = [f, a](const SphericalCoords& c) { return a * f.field(c); };
  auto jet = [f, a](const SphericalCoords& c) {
    const ChartJet j = f.jet(c);
    return ChartJet{a * j.value, a * j.d_t, a * j.d_r, a * j.d_alpha, a * j.d_beta};
  };
  PairTraits traits = f.traits();
  traits.real_axis_ok = traits.real_axis_ok || a == 0.0;
  std::ostringstream name;
  name.precision(17);
  name << "scale(" << a << "," << f.name() << ")";
  return ComplexLikePair(name.str(), std::move(field), std::move(jet), traits);
}

inline ComplexLikePair cl_mul(const ComplexLikePair& f, const ComplexLikePair& g) {
  auto field = [f, g](const SphericalCoords& c) { return f.field(c) * g.field(c); };
  auto jet = [f, g](const SphericalCoords& c) {
    const ChartJet a = f.jet(c);
    const ChartJet b = g.jet(c);
    auto d = [&](Complex da, Complex db) { return da * b.value + a.value * db; };
    return ChartJet{a.value * b.value, d(a.d_t, b.d_t), d(a.d_r, b.d_r), d(a.d_alpha, b.d_alpha),
                    d(a.d_beta, b.d_beta)};
  };
  return ComplexLikePair("mul(" + f.name() + "," + g.name() + ")", std::move(field), std::move(jet),
                         detail::combine(f.traits(), g.traits()));
}

/// (u - i v) / (u^2 + v^2); throws zero_function_value where f vanishes.
inline ComplexLikePair cl_inv(const ComplexLikePair& f) {
  const std::string name = "inv(" + f.name() + ")";
  auto field = [f, name](const SphericalCoords& c) { return detail::guarded_inverse(f.field(c), name); };
  auto jet = [f, name](const SphericalCoords& c) {
    const ChartJet a = f.jet(c);
    const Complex w = detail::guarded_inverse(a.value, name);
    const Complex minus_w2 = -(w * w);
    return ChartJet{w, minus_w2 * a.d_t, minus_w2 * a.d_r, minus_w2 * a.d_alpha, minus_w2 * a.d_beta};
  };
  PairTraits traits = f.traits();
  traits.real_axis_ok = false;
  return ComplexLikePair(name, std::move(field), std::move(jet), traits);
}

}  // namespace hyperholo
