#include "hyperholo/config.hpp"

#include <gtest/gtest.h>

namespace hyperholo {
namespace {

TEST(Config, Defaults) {
  const RunConfig c = parse_config("");
  EXPECT_EQ(c.regions.size(), 2u);
  EXPECT_EQ(c.quadrature, QuadratureSpec{});
  EXPECT_EQ(c.convergence_specs.size(), 3u);
  EXPECT_EQ(c.suites, std::vector<std::string>{"all"});
  EXPECT_EQ(c.seed, c.window.seed);
  EXPECT_TRUE(c.timestamp);
}

TEST(Config, ParsesEveryKey) {
  const RunConfig c = parse_config(R"(# comment
generators = power:3; mul(power:2,exp)
generator = exp
expect_fail = conj
region = torus(0,3,1)
region = sphere(0,0,2,0,1)
quadrature = 16,16,8,8
convergence = 8,8,8,8; 16,16,16,16,2
suites = cr, closure
window.t = -1, 1
window.r = 1, 2
window.alpha = 0.5, 1
window.beta = 0.5, 2
window.count = 12
seed = 99
tol.first = 1e-9
tol.second = 1e-5
tol.third = 1e-3
tol.pass_band = 1e-7
tol.fail_band = 1e-1
tol.integral_abs = 1e-8
tol.gauss = 1e-6
out = here
gauss.fields = 3
gauss.degree = 2
timestamp = false
)");
  EXPECT_EQ(c.generators, (std::vector<std::string>{"power:3", "mul(power:2,exp)", "exp"}));
  EXPECT_EQ(c.expect_fail, std::vector<std::string>{"conj"});
  ASSERT_EQ(c.regions.size(), 2u);
  EXPECT_EQ(region_text(c.regions[1]), "sphere(0,0,2,0,1)");
  EXPECT_EQ(c.quadrature, (QuadratureSpec{16, 16, 8, 8, 1}));
  EXPECT_EQ(c.convergence_specs[1].panels, 2);
  EXPECT_EQ(c.suites, (std::vector<std::string>{"cr", "closure"}));
  EXPECT_EQ(c.window.t_min, -1);
  EXPECT_EQ(c.window.r_max, 2);
  EXPECT_EQ(c.window.alpha_min, 0.5);
  EXPECT_EQ(c.window.beta_max, 2);
  EXPECT_EQ(c.window.count, 12);
  EXPECT_EQ(c.seed, 99u);
  EXPECT_EQ(c.window.seed, 99u);
  EXPECT_EQ(c.tolerances.first, 1e-9);
  EXPECT_EQ(c.tolerances.second, 1e-5);
  EXPECT_EQ(c.tolerances.third, 1e-3);
  EXPECT_EQ(c.tolerances.pass_band, 1e-7);
  EXPECT_EQ(c.tolerances.fail_band, 1e-1);
  EXPECT_EQ(c.tolerances.integral_abs, 1e-8);
  EXPECT_EQ(c.tolerances.gauss_rel, 1e-6);
  EXPECT_EQ(c.output_dir, "here");
  EXPECT_EQ(c.gauss_fields, 3);
  EXPECT_EQ(c.gauss_degree, 2);
  EXPECT_FALSE(c.timestamp);
}

TEST(Config, Rejections) {
  for (const char* text : {"bogus = 1", "seed", "seed = -3", "window.r = 0, 1", "window.beta = 0, 1",
                           "window.t = 2, 1", "window.count = 0", "quadrature = 3,8,8,8", "timestamp = maybe",
                           "region = torus(0,1,2)"}) {
    try {
      (void)parse_config(text);
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_TRUE(e.kind() == ErrorKind::config || e.kind() == ErrorKind::region_touches_real_axis) << text;
    }
  }
  EXPECT_THROW((void)load_config("/nonexistent/hyperholo.cfg"), Error);
}

}  // namespace
}  // namespace hyperholo
