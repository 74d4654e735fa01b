#pragma once

#include <array>
#include <cmath>

#include "hyperholo/coords.hpp"
#include "hyperholo/error.hpp"
#include "hyperholo/functions.hpp"
#include "hyperholo/quaternion.hpp"

namespace hyperholo {

/// Finite-difference steps. First derivatives use second-order central
/// differences; the Laplacian uses the fourth-order five-point stencil per
/// axis; the outer derivative of the Laplacian uses central differences with
/// one Richardson level (h and h/2).
///
/// The Laplacian step is set by rounding, not truncation: the outer
/// difference divides its noise by 2 * third, and at 1e-3 power:4 on the
/// default window already sits above 1e-4.
namespace fd_step {
inline constexpr double first = 1e-5;
inline constexpr double second = 5e-3;
inline constexpr double third = 1e-2;
}  // namespace fd_step

enum class Side { left, right };

/// How first derivatives are obtained for Cartesian operators.
enum class DerivativeRoute {
  /// Chain rule from the function's chart partials (closed-form or its own fallback).
  chart_partials,
  /// Central differences of eval() along t, x, y, z.
  cartesian_difference,
};

struct OperatorValue {
  Quaternion value;
  PartialsMethod method = PartialsMethod::closed_form;
  double step = 0.0;
};

/// Partial derivatives of a quaternion-valued function along t, x, y, z.
struct CartesianPartials {
  std::array<Quaternion, 4> d;
};

inline constexpr std::array<Quaternion, 4> kUnits = {Quaternion::real(1.0), Quaternion::unit_i(),
                                                     Quaternion::unit_j(), Quaternion::unit_k()};

inline constexpr Quaternion axis_step(int axis, double h) noexcept {
  return kUnits[static_cast<std::size_t>(axis)] * h;
}

/// Sum of e_a * d_a (left) or d_a * e_a (right) with e_0 = 1.
inline Quaternion apply_fueter(const CartesianPartials& partials, Side side) noexcept {
  Quaternion out = partials.d[0];
  for (std::size_t a = 1; a < 4; ++a) {
    out += side == Side::left ? kUnits[a] * partials.d[a] : partials.d[a] * kUnits[a];
  }
  return out;
}

template <class Field>
CartesianPartials central_partials(const Field& field, const Quaternion& p, double h) {
  CartesianPartials out;
  for (int a = 0; a < 4; ++a) {
    const Quaternion e = axis_step(a, h);
    out.d[static_cast<std::size_t>(a)] = (field(p + e) - field(p - e)) / (2.0 * h);
  }
  return out;
}

/// Fueter operator of an arbitrary quaternion field by central differences.
template <class Field>
Quaternion fueter_difference(const Field& field, const Quaternion& p, Side side, double h = fd_step::first) {
  return apply_fueter(central_partials(field, p, h), side);
}

/// Cartesian partials of f from its chart partials via the inverse Jacobian
/// of (t, r, alpha, beta) -> (t, x, y, z).
///
/// Writing n = Im(p)/r, the vector part of f is v n and
///   d_k (v n_j) = (v_r - v/r) n_j n_k + (v/r) delta_jk + (angular part of d_k v) n_j,
/// grouped so that the linear generator differentiates without rounding.
inline CartesianPartials chart_partials(const ComplexLikePair& f, const Quaternion& p) {
  const SphericalCoords c = to_spherical(p);
  if (c.r == 0.0) {
    throw Error(ErrorKind::real_axis_evaluation, "derivative of " + f.name() + " at r == 0");
  }
  const double sb = std::sin(c.beta);
  if (!f.intrinsic() && sb == 0.0) {
    throw Error(ErrorKind::pole_singularity, "angular partials of " + f.name() + " at sin(beta) == 0");
  }
  const ChartJet jet = f.jet(c);
  const double r = c.r;
  const std::array<double, 3> n = {p.x / r, p.y / r, p.z / r};

  std::array<double, 3> grad_alpha{};
  std::array<double, 3> grad_beta{};
  if (!f.intrinsic()) {
    const double sa = std::sin(c.alpha);
    const double ca = std::cos(c.alpha);
    const double cb = std::cos(c.beta);
    grad_alpha = {-sa / (r * sb), ca / (r * sb), 0.0};
    grad_beta = {ca * cb / r, sa * cb / r, -sb / r};
  }

  const double v = jet.v();
  const double v_over_r = v / r;
  const double radial_excess = jet.v_r() - v_over_r;

  CartesianPartials out;
  out.d[0] = {jet.u_t(), jet.v_t() * n[0], jet.v_t() * n[1], jet.v_t() * n[2]};
  for (std::size_t k = 0; k < 3; ++k) {
    double du = jet.u_r() * n[k];
    double dv_angular = 0.0;
    if (!f.intrinsic()) {
      du += jet.u_alpha() * grad_alpha[k] + jet.u_beta() * grad_beta[k];
      dv_angular = jet.v_alpha() * grad_alpha[k] + jet.v_beta() * grad_beta[k];
    }
    std::array<double, 3> dvec{};
    for (std::size_t m = 0; m < 3; ++m) {
      dvec[m] = radial_excess * n[m] * n[k] + (m == k ? v_over_r : 0.0) + dv_angular * n[m];
    }
    out.d[k + 1] = {du, dvec[0], dvec[1], dvec[2]};
  }
  return out;
}

namespace detail {

inline OperatorValue chart_metadata(const ComplexLikePair& f, const Quaternion& value) {
  const bool closed = f.method() == PartialsMethod::closed_form;
  return {value, f.method(), closed ? 0.0 : kCustomPartialsStep};
}

}  // namespace detail

inline OperatorValue fueter_cartesian(const ComplexLikePair& f, const Quaternion& p, Side side,
                                      DerivativeRoute route = DerivativeRoute::chart_partials) {
  if (route == DerivativeRoute::cartesian_difference) {
    auto field = [&f](const Quaternion& q) { return eval(f, q); };
    return {fueter_difference(field, p, side, fd_step::first), PartialsMethod::finite_difference, fd_step::first};
  }
  return detail::chart_metadata(f, apply_fueter(chart_partials(f, p), side));
}

/// D_l f = d_t f + i d_x f + j d_y f + k d_z f.
inline OperatorValue fueter_left_cartesian(const ComplexLikePair& f, const Quaternion& p,
                                           DerivativeRoute route = DerivativeRoute::chart_partials) {
  return fueter_cartesian(f, p, Side::left, route);
}

/// D_r f = d_t f + (d_x f) i + (d_y f) j + (d_z f) k.
inline OperatorValue fueter_right_cartesian(const ComplexLikePair& f, const Quaternion& p,
                                            DerivativeRoute route = DerivativeRoute::chart_partials) {
  return fueter_cartesian(f, p, Side::right, route);
}

/// (d_t + iota d_r) f = (u_t - v_r) + iota (v_t + u_r).
inline OperatorValue cullen_operator(const ComplexLikePair& f, const Quaternion& p) {
  const SphericalCoords c = to_spherical(p);
  if (c.r == 0.0) {
    throw Error(ErrorKind::real_axis_evaluation, "Cullen operator of " + f.name() + " at r == 0");
  }
  const ChartJet jet = f.jet(c);
  const double s = (jet.v_t() + jet.u_r()) / c.r;
  return detail::chart_metadata(f, {jet.u_t() - jet.v_r(), s * p.x, s * p.y, s * p.z});
}

/// Angular term (iota_alpha)^-1 d_alpha f + (iota_beta)^-1 d_beta f, with
/// d_alpha f = u_alpha + iota_alpha v + iota v_alpha (likewise for beta).
inline OperatorValue spherical_dirac(const ComplexLikePair& f, const Quaternion& p) {
  const SphericalCoords c = to_spherical(p);
  if (c.r == 0.0) {
    throw Error(ErrorKind::real_axis_evaluation, "spherical Dirac term of " + f.name() + " at r == 0");
  }
  const Quaternion inv_a = inv_iota_alpha(c.alpha, c.beta);
  const ChartJet jet = f.jet(c);
  const Quaternion unit = iota(c.alpha, c.beta);
  const Quaternion d_alpha = Quaternion::real(jet.u_alpha()) + iota_alpha(c.alpha, c.beta) * jet.v() +
                             unit * jet.v_alpha();
  const Quaternion d_beta =
      Quaternion::real(jet.u_beta()) + iota_beta(c.alpha, c.beta) * jet.v() + unit * jet.v_beta();
  return detail::chart_metadata(f, inv_a * d_alpha + inv_iota_beta(c.alpha, c.beta) * d_beta);
}

/// D_l in the chart: (d_t + iota d_r) - (1/r) (spherical Dirac term).
inline OperatorValue fueter_left_spherical(const ComplexLikePair& f, const Quaternion& p) {
  const OperatorValue dirac = spherical_dirac(f, p);
  const OperatorValue cullen = cullen_operator(f, p);
  return {cullen.value - dirac.value / imag_norm(p), dirac.method, dirac.step};
}

/// Four-dimensional Laplacian of a quaternion field, fourth-order stencil per axis.
template <class Field>
Quaternion laplacian_difference(const Field& field, const Quaternion& p, double h = fd_step::second) {
  const Quaternion centre = field(p);
  Quaternion acc;
  for (int a = 0; a < 4; ++a) {
    const Quaternion e = axis_step(a, h);
    const Quaternion e2 = axis_step(a, 2.0 * h);
    acc += (16.0 * (field(p + e) + field(p - e)) - (field(p + e2) + field(p - e2)) - 30.0 * centre);
  }
  return acc / (12.0 * h * h);
}

namespace detail {

/// Throws step_too_small if a stencil of the given reach would cross a
/// singular locus of f (the real axis, or the polar axis for non-intrinsic f).
inline void check_stencil_reach(const ComplexLikePair& f, const Quaternion& p, double reach) {
  const double r = imag_norm(p);
  if (!f.traits().real_axis_ok && r <= reach) {
    throw Error(ErrorKind::step_too_small, "stencil of reach " + std::to_string(reach) + " crosses the real axis");
  }
  if (!f.intrinsic() && std::hypot(p.x, p.y) <= reach) {
    throw Error(ErrorKind::step_too_small, "stencil of reach " + std::to_string(reach) + " crosses the polar axis");
  }
}

}  // namespace detail

inline OperatorValue laplacian4(const ComplexLikePair& f, const Quaternion& p) {
  detail::check_stencil_reach(f, p, 2.0 * fd_step::second);
  auto field = [&f](const Quaternion& q) { return eval(f, q); };
  return {laplacian_difference(field, p, fd_step::second), PartialsMethod::finite_difference, fd_step::second};
}

/// D_side applied to a field known only through point values: central
/// differences at h and h/2 combined by one Richardson step.
template <class Field>
Quaternion fueter_richardson(const Field& field, const Quaternion& p, Side side, double h = fd_step::third) {
  const Quaternion coarse = fueter_difference(field, p, side, h);
  const Quaternion fine = fueter_difference(field, p, side, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

/// D_side (Laplacian f). Zero for hyperholomorphic f.
inline OperatorValue fueter_of_laplacian(const ComplexLikePair& f, const Quaternion& p, Side side) {
  detail::check_stencil_reach(f, p, fd_step::third + 2.0 * fd_step::second);
  auto lap = [&f](const Quaternion& q) {
    auto field = [&f](const Quaternion& s) { return eval(f, s); };
    return laplacian_difference(field, q, fd_step::second);
  };
  return {fueter_richardson(lap, p, side, fd_step::third), PartialsMethod::finite_difference, fd_step::third};
}

}  // namespace hyperholo
