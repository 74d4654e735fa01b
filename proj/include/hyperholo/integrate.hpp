#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "hyperholo/coords.hpp"
#include "hyperholo/error.hpp"
#include "hyperholo/functions.hpp"
#include "hyperholo/operators.hpp"
#include "hyperholo/quadrature.hpp"
#include "hyperholo/quaternion.hpp"
#include "hyperholo/regions.hpp"

namespace hyperholo {

struct SurfaceNode {
  Quaternion point;
  /// Unit outward normal n0 + n1 i + n2 j + n3 k.
  Quaternion normal;
  /// Surface measure times rule weight.
  double weight = 0.0;
};

struct VolumeNode {
  Quaternion point;
  double weight = 0.0;
};

namespace detail {

/// Unit vector on S^3: (cos c, sin c cos e, sin c sin e cos f, sin c sin e sin f).
inline Quaternion s3_direction(double chi, double eta, double phi) noexcept {
  const double sc = std::sin(chi);
  const double se = std::sin(eta);
  return {std::cos(chi), sc * std::cos(eta), sc * se * std::cos(phi), sc * se * std::sin(phi)};
}

}  // namespace detail

/// Visits every boundary node in a fixed order.
///
/// Torus: point = (t0 + rho cos th) + (r0 + rho sin th) iota(a, b), normal =
/// cos th + sin th iota, dS = rho (r0 + rho sin th)^2 sin b dth da db.
/// Sphere: point = centre + rho m(chi, eta, phi) on S^3, normal = m,
/// dS = rho^3 sin^2 chi sin eta dchi deta dphi. The sphere's periodic angle
/// uses n_alpha; both polar angles use n_beta.
template <class Visitor>
void for_each_surface_node(const Region& region, const QuadratureSpec& spec, Visitor&& visit) {
  validate(spec);
  if (const auto* torus = std::get_if<TorusRegion>(&region)) {
    const Rule theta = periodic_trapezoid(spec.n_theta);
    const Rule alpha = periodic_trapezoid(spec.n_alpha);
    const Rule beta = gauss_legendre(spec.n_beta, 0.0, std::numbers::pi, spec.panels);
    for (std::size_t a = 0; a < theta.size(); ++a) {
      const double ct = std::cos(theta.nodes[a]);
      const double st = std::sin(theta.nodes[a]);
      const double t = torus->t0 + torus->rho * ct;
      const double r = torus->r0 + torus->rho * st;
      for (std::size_t b = 0; b < alpha.size(); ++b) {
        for (std::size_t c = 0; c < beta.size(); ++c) {
          const Quaternion unit = iota(alpha.nodes[b], beta.nodes[c]);
          SurfaceNode node;
          node.point = Quaternion::real(t) + unit * r;
          node.normal = Quaternion::real(ct) + unit * st;
          node.weight = torus->rho * r * r * std::sin(beta.nodes[c]) * theta.weights[a] * alpha.weights[b] *
                        beta.weights[c];
          visit(node);
        }
      }
    }
    return;
  }
  const auto& sphere = std::get<OffsetSphereRegion>(region);
  const Rule chi = gauss_legendre(spec.n_beta, 0.0, std::numbers::pi, spec.panels);
  const Rule eta = gauss_legendre(spec.n_beta, 0.0, std::numbers::pi, spec.panels);
  const Rule phi = periodic_trapezoid(spec.n_alpha);
  const double rho3 = sphere.rho * sphere.rho * sphere.rho;
  for (std::size_t a = 0; a < chi.size(); ++a) {
    const double sc = std::sin(chi.nodes[a]);
    for (std::size_t b = 0; b < eta.size(); ++b) {
      const double measure = rho3 * sc * sc * std::sin(eta.nodes[b]) * chi.weights[a] * eta.weights[b];
      for (std::size_t c = 0; c < phi.size(); ++c) {
        const Quaternion m = detail::s3_direction(chi.nodes[a], eta.nodes[b], phi.nodes[c]);
        visit(SurfaceNode{sphere.center + m * sphere.rho, m, measure * phi.weights[c]});
      }
    }
  }
}

/// Visits every interior node in a fixed order.
///
/// Torus: the (t, r) disk in polar form (Gauss in the radius, trapezoid in
/// theta) times S^2 with weight r^2 sin b. Sphere: Gauss radial shells times
/// the S^3 angles of for_each_surface_node, Cartesian measure s^3 dS.
template <class Visitor>
void for_each_volume_node(const Region& region, const QuadratureSpec& spec, Visitor&& visit) {
  validate(spec);
  if (const auto* torus = std::get_if<TorusRegion>(&region)) {
    const Rule radial = gauss_legendre(spec.n_radial, 0.0, torus->rho, spec.panels);
    const Rule theta = periodic_trapezoid(spec.n_theta);
    const Rule alpha = periodic_trapezoid(spec.n_alpha);
    const Rule beta = gauss_legendre(spec.n_beta, 0.0, std::numbers::pi, spec.panels);
    for (std::size_t s = 0; s < radial.size(); ++s) {
      const double rad = radial.nodes[s];
      for (std::size_t a = 0; a < theta.size(); ++a) {
        const double t = torus->t0 + rad * std::cos(theta.nodes[a]);
        const double r = torus->r0 + rad * std::sin(theta.nodes[a]);
        const double disk = rad * radial.weights[s] * theta.weights[a];
        for (std::size_t b = 0; b < alpha.size(); ++b) {
          for (std::size_t c = 0; c < beta.size(); ++c) {
            const Quaternion unit = iota(alpha.nodes[b], beta.nodes[c]);
            visit(VolumeNode{Quaternion::real(t) + unit * r,
                             disk * r * r * std::sin(beta.nodes[c]) * alpha.weights[b] * beta.weights[c]});
          }
        }
      }
    }
    return;
  }
  const auto& sphere = std::get<OffsetSphereRegion>(region);
  const Rule radial = gauss_legendre(spec.n_radial, 0.0, sphere.rho, spec.panels);
  const Rule chi = gauss_legendre(spec.n_beta, 0.0, std::numbers::pi, spec.panels);
  const Rule eta = gauss_legendre(spec.n_beta, 0.0, std::numbers::pi, spec.panels);
  const Rule phi = periodic_trapezoid(spec.n_alpha);
  for (std::size_t s = 0; s < radial.size(); ++s) {
    const double rad = radial.nodes[s];
    const double shell = rad * rad * rad * radial.weights[s];
    for (std::size_t a = 0; a < chi.size(); ++a) {
      const double sc = std::sin(chi.nodes[a]);
      for (std::size_t b = 0; b < eta.size(); ++b) {
        const double measure = shell * sc * sc * std::sin(eta.nodes[b]) * chi.weights[a] * eta.weights[b];
        for (std::size_t c = 0; c < phi.size(); ++c) {
          const Quaternion m = detail::s3_direction(chi.nodes[a], eta.nodes[b], phi.nodes[c]);
          visit(VolumeNode{sphere.center + m * rad, measure * phi.weights[c]});
        }
      }
    }
  }
}

inline std::vector<SurfaceNode> surface_nodes(const Region& region, const QuadratureSpec& spec) {
  std::vector<SurfaceNode> out;
  for_each_surface_node(region, spec, [&out](const SurfaceNode& n) { out.push_back(n); });
  return out;
}

inline std::vector<VolumeNode> volume_nodes(const Region& region, const QuadratureSpec& spec) {
  std::vector<VolumeNode> out;
  for_each_volume_node(region, spec, [&out](const VolumeNode& n) { out.push_back(n); });
  return out;
}

// ---------------------------------------------------------------------------
// Divergence theorem

/// Four quaternion-valued fields f_0..f_3 attached to the axes t, x, y, z.
/// If `divergence` is empty it is computed by central differences.
struct DivergenceField {
  std::function<std::array<Quaternion, 4>(const Quaternion&)> components;
  std::function<Quaternion(const Quaternion&)> divergence;
};

inline Quaternion divergence_at(const DivergenceField& field, const Quaternion& p) {
  if (field.divergence) {
    return field.divergence(p);
  }
  constexpr double h = fd_step::first;
  Quaternion acc;
  for (int a = 0; a < 4; ++a) {
    const Quaternion e = axis_step(a, h);
    const auto idx = static_cast<std::size_t>(a);
    acc += (field.components(p + e)[idx] - field.components(p - e)[idx]) / (2.0 * h);
  }
  return acc;
}

struct GaussComparison {
  Quaternion volume_side;
  Quaternion surface_side;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
};

/// Relative mismatch |a - b| / (|b| + 1e-12).
inline double relative_mismatch(const Quaternion& a, const Quaternion& b) { return norm(a - b) / (norm(b) + 1e-12); }

/// Both sides of int_{K*} sum_a d_a f_a dV = int_K sum_a f_a n_a dS.
inline GaussComparison gauss_check(const DivergenceField& field, const Region& region, const QuadratureSpec& spec) {
  QuaternionSum volume;
  for_each_volume_node(region, spec,
                       [&](const VolumeNode& node) { volume.add(divergence_at(field, node.point) * node.weight); });
  QuaternionSum surface;
  for_each_surface_node(region, spec, [&](const SurfaceNode& node) {
    const auto f = field.components(node.point);
    const Quaternion flux = f[0] * node.normal.w + f[1] * node.normal.x + f[2] * node.normal.y + f[3] * node.normal.z;
    surface.add(flux * node.weight);
  });
  GaussComparison out;
  out.volume_side = volume.value();
  out.surface_side = surface.value();
  out.abs_diff = norm(out.surface_side - out.volume_side);
  out.rel_diff = relative_mismatch(out.surface_side, out.volume_side);
  return out;
}

// ---------------------------------------------------------------------------
// The two sides of the integral theorem

namespace detail {

inline void require_single_valued(const ComplexLikePair& f) {
  if (!f.single_valued()) {
    throw Error(ErrorKind::not_single_valued, f.name());
  }
}

}  // namespace detail

/// int_K n(p) f(p) / r^2 dS (left multiplication by the normal).
inline Quaternion lhs_integral(const ComplexLikePair& f, const Region& region, const QuadratureSpec& spec) {
  detail::require_single_valued(f);
  QuaternionSum sum;
  for_each_surface_node(region, spec, [&](const SurfaceNode& node) {
    const double r = imag_norm(node.point);
    sum.add(node.normal * eval(f, node.point) * (node.weight / (r * r)));
  });
  return sum.value();
}

/// int_K f(p) n(p) / r^2 dS (right multiplication by the normal).
inline Quaternion lhs_integral_right(const ComplexLikePair& f, const Region& region, const QuadratureSpec& spec) {
  detail::require_single_valued(f);
  QuaternionSum sum;
  for_each_surface_node(region, spec, [&](const SurfaceNode& node) {
    const double r = imag_norm(node.point);
    sum.add(eval(f, node.point) * node.normal * (node.weight / (r * r)));
  });
  return sum.value();
}

/// -2 int_{K*} u iota / r^3 dV; pure imaginary.
inline Quaternion rhs_integral(const ComplexLikePair& f, const Region& region, const QuadratureSpec& spec) {
  detail::require_single_valued(f);
  QuaternionSum sum;
  for_each_volume_node(region, spec, [&](const VolumeNode& node) {
    const SphericalCoords c = to_spherical(node.point);
    const double u = f.field(c).real();
    // iota / r^3 = Im(p) / r^4
    const double r2 = c.r * c.r;
    sum.add(node.point.imag() * (u * node.weight / (r2 * r2)));
  });
  return -2.0 * sum.value();
}

/// int_{K*} D_l(f / r^2) dV, the middle link between the two sides.
inline Quaternion chain_integral(const ComplexLikePair& f, const Region& region, const QuadratureSpec& spec) {
  detail::require_single_valued(f);
  const ComplexLikePair scaled = cl_mul(f, make_inverse_r_squared());
  QuaternionSum sum;
  for_each_volume_node(region, spec, [&](const VolumeNode& node) {
    sum.add(fueter_left_cartesian(scaled, node.point).value * node.weight);
  });
  return sum.value();
}

}  // namespace hyperholo
