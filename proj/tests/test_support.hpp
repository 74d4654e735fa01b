#pragma once

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "hyperholo/quaternion.hpp"

namespace hyperholo::testing {

inline ::testing::AssertionResult near(const Quaternion& actual, const Quaternion& expected, double tol) {
  const double err = norm(actual - expected);
  if (err <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "actual " << actual << " expected " << expected << " |diff| = " << err
                                       << " > " << tol;
}

inline constexpr double kUlp = std::numeric_limits<double>::epsilon();

}  // namespace hyperholo::testing

#define EXPECT_QUAT_NEAR(actual, expected, tol) EXPECT_TRUE(::hyperholo::testing::near((actual), (expected), (tol)))
