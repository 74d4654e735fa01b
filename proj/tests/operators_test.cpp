#include "hyperholo/operators.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hyperholo/generator_text.hpp"
#include "hyperholo/sampling.hpp"
#include "test_support.hpp"

namespace hyperholo {
namespace {

constexpr double kPi = std::numbers::pi;

Quaternion random_point(Rng& rng) {
  return from_spherical(
      {rng.uniform(-2, 2), rng.uniform(0.5, 3), rng.uniform(0.2, 2 * kPi - 0.2), rng.uniform(0.3, kPi - 0.3)});
}

template <class Fn>
void expect_error(ErrorKind kind, Fn&& fn) {
  try {
    fn();
    FAIL() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

TEST(Fueter, IdentityIsMinusTwoExactly) {
  const auto id = make_power(1);
  for (const Quaternion p : {Quaternion{0, 1, 0, 0}, Quaternion{1, 1, 1, 1}, Quaternion{-0.5, 0.2, -3, 0.7}}) {
    EXPECT_EQ(fueter_left_cartesian(id, p).value, Quaternion::real(-2)) << p;
    EXPECT_EQ(fueter_right_cartesian(id, p).value, Quaternion::real(-2)) << p;
    EXPECT_QUAT_NEAR(fueter_left_cartesian(id, p, DerivativeRoute::cartesian_difference).value, Quaternion::real(-2),
                     1e-8);
  }
}

TEST(Fueter, SquareIsMinusFourT) {
  const auto sq = make_power(2);
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const Quaternion p = random_point(rng);
    EXPECT_QUAT_NEAR(fueter_left_cartesian(sq, p).value, Quaternion::real(-4 * p.w), 1e-13);
    EXPECT_QUAT_NEAR(fueter_right_cartesian(sq, p).value, Quaternion::real(-4 * p.w), 1e-13);
    EXPECT_QUAT_NEAR(fueter_left_spherical(sq, p).value, Quaternion::real(-4 * p.w), 1e-13);
  }
}

TEST(Fueter, NonExamples) {
  const Quaternion p{0.3, 0.8, -1.1, 0.4};
  // conj: d_t t = 1 and i d_x(-x i) = 1 on each imaginary axis
  EXPECT_QUAT_NEAR(fueter_left_cartesian(make_conjugate_like(), p).value, Quaternion::real(4), 1e-14);
  // radial: gradient of r, i.e. iota
  EXPECT_QUAT_NEAR(fueter_left_cartesian(make_radial(), p).value, p.imag() / imag_norm(p), 1e-14);
  EXPECT_QUAT_NEAR(fueter_left_cartesian(make_constant(5), p).value, Quaternion{}, 0.0);
}

TEST(Fueter, DerivativeRoutesAgree) {
  const std::vector<std::string> texts = {"power:3", "exp", "reciprocal", "prodform(exp,id)", "conj", "radial",
                                          "mul(power:2,prodform(id,exp))", "inv(exp)", "iota"};
  Rng rng(5);
  for (const auto& text : texts) {
    const auto f = parse_generator(text);
    for (int k = 0; k < 40; ++k) {
      const Quaternion p = random_point(rng);
      for (Side side : {Side::left, Side::right}) {
        const Quaternion a = fueter_cartesian(f, p, side).value;
        const Quaternion b = fueter_cartesian(f, p, side, DerivativeRoute::cartesian_difference).value;
        EXPECT_QUAT_NEAR(a, b, 1e-7 * (1 + norm(a))) << text;
      }
    }
  }
}

TEST(Fueter, SphericalFormMatchesCartesian) {
  const std::vector<std::string> texts = {"power:4", "exp", "reciprocal", "prodform(power:2,exp)", "conj", "radial",
                                          "iota", "add(exp,prodform(exp,id))"};
  Rng rng(7);
  for (const auto& text : texts) {
    const auto f = parse_generator(text);
    for (int k = 0; k < 40; ++k) {
      const Quaternion p = random_point(rng);
      const Quaternion a = fueter_left_cartesian(f, p).value;
      EXPECT_QUAT_NEAR(fueter_left_spherical(f, p).value, a, 1e-8 * (1 + norm(a))) << text;
    }
  }
}

TEST(Fueter, RightEqualsLeftForIntrinsic) {
  Rng rng(9);
  for (const char* text : {"power:3", "exp", "reciprocal", "mul(exp,power:2)"}) {
    const auto f = parse_generator(text);
    for (int k = 0; k < 20; ++k) {
      const Quaternion p = random_point(rng);
      const Quaternion a = fueter_left_cartesian(f, p).value;
      EXPECT_QUAT_NEAR(fueter_right_cartesian(f, p).value, a, 1e-13 * (1 + norm(a))) << text;
    }
  }
}

TEST(FueterProperty, Linearity) {
  const auto f = parse_generator("prodform(exp,id)");
  const auto g = make_power(3);
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const Quaternion p = random_point(rng);
    const double a = rng.uniform(-2, 2);
    const double b = rng.uniform(-2, 2);
    const Quaternion combined = fueter_left_cartesian(cl_add(cl_scale(a, f), cl_scale(b, g)), p).value;
    const Quaternion split = fueter_left_cartesian(f, p).value * a + fueter_left_cartesian(g, p).value * b;
    EXPECT_QUAT_NEAR(combined, split, 1e-12 * (1 + norm(split)));
  }
}

TEST(Cullen, Examples) {
  const Quaternion p{0.4, 0.3, 1.2, -0.5};
  EXPECT_QUAT_NEAR(cullen_operator(make_conjugate_like(), p).value, Quaternion::real(2), 1e-15);
  EXPECT_QUAT_NEAR(cullen_operator(make_power(1), p).value, Quaternion{}, 0.0);
  EXPECT_QUAT_NEAR(cullen_operator(make_exp(), p).value, Quaternion{}, 1e-15);
  EXPECT_QUAT_NEAR(cullen_operator(make_radial(), p).value, p.imag() / imag_norm(p), 1e-15);
}

TEST(SphericalDirac, IsTwiceVForHyperholomorphic) {
  Rng rng(15);
  for (const char* text : {"power:1", "power:3", "exp", "prodform(exp,id)", "reciprocal"}) {
    const auto f = parse_generator(text);
    for (int k = 0; k < 20; ++k) {
      const Quaternion p = random_point(rng);
      const double v = f.field(to_spherical(p)).imag();
      EXPECT_QUAT_NEAR(spherical_dirac(f, p).value, Quaternion::real(2 * v), 1e-12 * (1 + std::abs(v))) << text;
    }
  }
}

TEST(Laplacian, PolynomialExamples) {
  const Quaternion p{0.7, 1.1, -0.4, 0.9};
  auto plumbing = [](const Quaternion& q) { return Quaternion::real(q.w * q.w + q.x * q.x); };
  EXPECT_QUAT_NEAR(laplacian_difference(plumbing, p), Quaternion::real(4), 1e-9);
  // t^2 - |x|^2 contributes 2 - 6, the 2 t Im(p) part is harmonic
  EXPECT_QUAT_NEAR(laplacian4(make_power(2), p).value, Quaternion::real(-4), 1e-9);
  // Delta p^3 = -12 t + ... checked against a difference of the closed form p^3
  auto cube = [](const Quaternion& q) { return q * q * q; };
  EXPECT_QUAT_NEAR(laplacian4(make_power(3), p).value, laplacian_difference(cube, p), 1e-8);
  EXPECT_QUAT_NEAR(laplacian4(make_power(1), p).value, Quaternion{}, 1e-9);
}

TEST(Laplacian, RadialNonExample) {
  // Delta r = 2/r in the three imaginary directions
  const Quaternion p{0.1, 1.0, 1.0, 0.5};
  EXPECT_QUAT_NEAR(laplacian4(make_radial(), p).value, Quaternion::real(2 / imag_norm(p)), 1e-8);
}

TEST(FueterOfLaplacian, VanishesForHyperholomorphic) {
  Rng rng(17);
  for (const char* text : {"power:2", "power:4", "exp", "reciprocal", "prodform(exp,id)"}) {
    const auto f = parse_generator(text);
    for (int k = 0; k < 10; ++k) {
      const Quaternion p = random_point(rng);
      for (Side side : {Side::left, Side::right}) {
        EXPECT_LT(norm(fueter_of_laplacian(f, p, side).value), 1e-4) << text;
      }
    }
  }
  // D_l(2/r) = -2 iota / r^2 for the radial non-example
  const Quaternion p{0.0, 1.2, 0.3, -0.4};
  const double r = imag_norm(p);
  EXPECT_QUAT_NEAR(fueter_of_laplacian(make_radial(), p, Side::left).value, p.imag() * (-2 / (r * r * r)), 1e-5);
}

TEST(Operators, ErrorPaths) {
  const auto local = parse_generator("prodform(exp,id)");
  expect_error(ErrorKind::pole_singularity, [&] { (void)fueter_left_cartesian(local, {0, 0, 0, 1}); });
  expect_error(ErrorKind::pole_singularity, [&] { (void)spherical_dirac(local, {0, 0, 0, 1}); });
  // intrinsic generators have no polar singularity
  EXPECT_QUAT_NEAR(fueter_left_cartesian(make_power(2), {1, 0, 0, 1}).value, Quaternion::real(-4), 1e-14);
  expect_error(ErrorKind::real_axis_evaluation, [] { (void)fueter_left_cartesian(make_power(2), {1, 0, 0, 0}); });
  expect_error(ErrorKind::real_axis_evaluation, [] { (void)cullen_operator(make_power(2), {1, 0, 0, 0}); });
  expect_error(ErrorKind::step_too_small, [] { (void)laplacian4(make_power(2), {0, 0.005, 0, 0}); });
  expect_error(ErrorKind::step_too_small, [] { (void)fueter_of_laplacian(make_exp(), {0, 0.015, 0, 0}, Side::left); });
  expect_error(ErrorKind::step_too_small, [&] { (void)laplacian4(local, {0, 0.001, 0.001, 1}); });
  EXPECT_NO_THROW((void)laplacian4(make_constant(1), {0, 0.001, 0, 0}));
}

}  // namespace
}  // namespace hyperholo
