#include "hyperholo/integrate.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hyperholo/fields.hpp"
#include "hyperholo/generator_text.hpp"
#include "test_support.hpp"

namespace hyperholo {
namespace {

constexpr double kPi = std::numbers::pi;

const QuadratureSpec kFine{};

TEST(Regions, ConstructionAndText) {
  EXPECT_EQ(region_text(parse_region("torus(0, 2, 1)")), "torus(0,2,1)");
  EXPECT_EQ(region_text(parse_region("sphere(0,2,0,0,1)")), "sphere(0,2,0,0,1)");
  EXPECT_DOUBLE_EQ(min_radius(make_torus(0.5, 3, 0.5)), 2.5);
  EXPECT_DOUBLE_EQ(min_radius(make_offset_sphere({1, 0, 3, 4}, 2)), 3.0);
  for (const char* bad : {"torus(0,1,1)", "sphere(0,0.5,0,0,1)", "torus(0,2)", "cube(1)", "torus(0,2,x)"}) {
    EXPECT_THROW((void)parse_region(bad), Error) << bad;
  }
  try {
    (void)make_torus(0, 1, 2);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::region_touches_real_axis);
  }
}

TEST(Regions, QuadratureSpecText) {
  EXPECT_EQ(spec_text(QuadratureSpec{32, 32, 16, 16, 1}), "32x32x16x16");
  EXPECT_EQ(spec_text(QuadratureSpec{}), "64x32x16x16p2");
  EXPECT_EQ(parse_quadrature_spec("8,8,8,8"), (QuadratureSpec{8, 8, 8, 8, 1}));
  EXPECT_EQ(parse_quadrature_spec("8,16,8,8,3").doubled(), (QuadratureSpec{16, 32, 16, 16, 3}));
  EXPECT_THROW((void)parse_quadrature_spec("2,8,8,8"), Error);
  EXPECT_THROW((void)parse_quadrature_spec("8,8,8"), Error);
  EXPECT_THROW((void)parse_quadrature_spec("8,8,8,8.5"), Error);
}

TEST(SurfaceNodes, TorusAreaAndNormals) {
  const TorusRegion torus = make_torus(0.3, 2, 1);
  CompensatedSum area;
  for (const SurfaceNode& node : surface_nodes(torus, kFine)) {
    EXPECT_GT(node.weight, 0);
    EXPECT_NEAR(norm(node.normal), 1.0, 1e-15);
    // normal points away from the core circle (t0, r0)
    const double r = imag_norm(node.point);
    const double dt = node.point.w - torus.t0;
    const double dr = r - torus.r0;
    EXPECT_NEAR(node.normal.w, dt / torus.rho, 1e-14);
    EXPECT_NEAR(node.normal.x * node.point.x + node.normal.y * node.point.y + node.normal.z * node.point.z,
                dr / torus.rho * r, 1e-13);
    area.add(node.weight);
  }
  EXPECT_NEAR(area.value(), torus.rho * 4 * kPi * 2 * kPi * (torus.r0 * torus.r0 + torus.rho * torus.rho / 2), 1e-11);
}

TEST(SurfaceNodes, SphereAreaAndNormals) {
  const OffsetSphereRegion sphere = make_offset_sphere({0.5, 1, 2, -1}, 1.5);
  CompensatedSum area;
  for (const SurfaceNode& node : surface_nodes(sphere, kFine)) {
    EXPECT_GT(node.weight, 0);
    EXPECT_QUAT_NEAR(node.point - sphere.center, node.normal * sphere.rho, 1e-14);
    EXPECT_NEAR(norm(node.normal), 1.0, 1e-15);
    area.add(node.weight);
  }
  EXPECT_NEAR(area.value(), 2 * kPi * kPi * std::pow(1.5, 3), 1e-11);
}

TEST(VolumeNodes, Volumes) {
  CompensatedSum ball;
  for (const VolumeNode& node : volume_nodes(OffsetSphereRegion{}, kFine)) {
    EXPECT_GT(node.weight, 0);
    EXPECT_LE(norm(node.point - OffsetSphereRegion{}.center), 1.0);
    ball.add(node.weight);
  }
  EXPECT_NEAR(ball.value(), kPi * kPi / 2, 1e-12);
  CompensatedSum torus;
  for (const VolumeNode& node : volume_nodes(TorusRegion{}, kFine)) torus.add(node.weight);
  EXPECT_NEAR(torus.value(), 4 * kPi * kPi * 4.25, 1e-11);
}

TEST(Gauss, HandWrittenField) {
  // f_0 = t^2, f_1 = x t i, f_2 = y^2 j, f_3 = z k; divergence 2t + t i + 2y j + k
  DivergenceField field;
  field.components = [](const Quaternion& p) {
    return std::array<Quaternion, 4>{Quaternion::real(p.w * p.w), Quaternion{0, p.x * p.w, 0, 0},
                                     Quaternion{0, 0, p.y * p.y, 0}, Quaternion{0, 0, 0, p.z}};
  };
  field.divergence = [](const Quaternion& p) { return Quaternion{2 * p.w, p.w, 2 * p.y, 1}; };
  for (const Region& region : {Region{TorusRegion{}}, Region{OffsetSphereRegion{}}}) {
    const GaussComparison cmp = gauss_check(field, region, kFine);
    EXPECT_LT(cmp.rel_diff, 1e-12) << region_text(region);
    // the finite-difference fallback agrees to its truncation error
    DivergenceField fd = field;
    fd.divergence = nullptr;
    EXPECT_LT(gauss_check(fd, region, kFine).rel_diff, 1e-8) << region_text(region);
  }
  // volume of the unit ball about 2i times the k-part of the divergence
  EXPECT_NEAR(gauss_check(field, OffsetSphereRegion{}, kFine).volume_side.z, kPi * kPi / 2, 1e-12);
}

TEST(GaussProperty, RandomPolynomialFields) {
  Rng rng(21);
  for (int k = 0; k < 3; ++k) {
    const DivergenceField field = random_polynomial_field(3, rng);
    for (const Region& region : {Region{TorusRegion{}}, Region{make_offset_sphere({0.5, 0, 3, 0}, 2)}}) {
      EXPECT_LT(gauss_check(field, region, QuadratureSpec{32, 32, 16, 16, 1}).rel_diff, 1e-12);
    }
  }
}

// Independent oracle: the i-component reduced to a one-dimensional integral
// via the divergence theorem on each t-slice, evaluated at 25 digits.
TEST(IntegralTheorem, OffsetSphereOracles) {
  const OffsetSphereRegion sphere{};
  const Quaternion one_expected{0, -1.353921319266738622888, 0, 0};
  EXPECT_QUAT_NEAR(rhs_integral(make_constant(1), sphere, kFine), one_expected, 1e-12);
  EXPECT_QUAT_NEAR(lhs_integral(make_constant(1), sphere, kFine), one_expected, 1e-12);
  const Quaternion square_expected{0, 4.502068310071824721259, 0, 0};
  EXPECT_QUAT_NEAR(rhs_integral(make_power(2), sphere, kFine), square_expected, 1e-11);
  EXPECT_QUAT_NEAR(lhs_integral(make_power(2), sphere, kFine), square_expected, 1e-11);
  EXPECT_QUAT_NEAR(chain_integral(make_power(2), sphere, kFine), square_expected, 1e-10);
}

TEST(IntegralTheorem, TorusIntegralsVanishBySymmetry) {
  for (const char* text : {"constant:1", "power:3", "exp"}) {
    const auto f = parse_generator(text);
    EXPECT_LT(norm(lhs_integral(f, TorusRegion{}, kFine)), 1e-12) << text;
    EXPECT_LT(norm(rhs_integral(f, TorusRegion{}, kFine)), 1e-12) << text;
  }
}

TEST(IntegralTheorem, BothSidesAgreeAwayFromSymmetry) {
  const Region region = make_offset_sphere({0.4, 1.0, -2.0, 1.5}, 1.2);
  for (const char* text : {"power:1", "power:3", "exp", "reciprocal", "mul(exp,power:2)", "inv(exp)"}) {
    const auto f = parse_generator(text);
    const Quaternion rhs = rhs_integral(f, region, kFine);
    EXPECT_QUAT_NEAR(lhs_integral(f, region, kFine), rhs, 1e-9 * (1 + norm(rhs))) << text;
    EXPECT_QUAT_NEAR(lhs_integral_right(f, region, kFine), rhs, 1e-9 * (1 + norm(rhs))) << text;
    EXPECT_EQ(rhs.w, 0.0);
  }
}

TEST(IntegralTheorem, NonExampleBreaksIdentity) {
  const OffsetSphereRegion sphere{};
  const auto f = make_conjugate_like();
  EXPECT_GT(norm(lhs_integral(f, sphere, kFine) - rhs_integral(f, sphere, kFine)), 1e-2);
}

TEST(IntegralTheorem, RejectsMultiValuedGenerators) {
  const auto local = parse_generator("prodform(exp,id)");
  for (auto fn : {&lhs_integral, &lhs_integral_right, &rhs_integral, &chain_integral}) {
    try {
      (void)fn(local, TorusRegion{}, kFine);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::not_single_valued);
    }
  }
}

}  // namespace
}  // namespace hyperholo
