#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "hyperholo/fields.hpp"
#include "hyperholo/functions.hpp"
#include "hyperholo/integrate.hpp"
#include "hyperholo/operators.hpp"
#include "hyperholo/sampling.hpp"

namespace hyperholo {

/// Residual thresholds, split by derivative order.
struct Tolerances {
  double first = 1e-8;
  double second = 1e-6;
  double third = 1e-4;
  /// Equivalence indicator: below `pass_band` counts as satisfied, above
  /// `fail_band` as violated, in between as indeterminate.
  double pass_band = 1e-6;
  double fail_band = 1e-2;
  double max_disagreement_fraction = 0.01;
  /// Absolute level below which an integral mismatch counts as zero.
  double integral_abs = 1e-9;
  double gauss_rel = 1e-7;
};

using Metadata = std::vector<std::pair<std::string, std::string>>;

struct CheckReport {
  std::string name;
  std::string generator;
  double max_abs_residual = 0.0;
  double mean_abs_residual = 0.0;
  double tolerance = 0.0;
  int sample_count = 0;
  bool passed = false;
  Metadata metadata;
};

namespace detail {

class ResidualAccumulator {
 public:
  void add(double residual) {
    max_ = std::max(max_, residual);
    if (std::isnan(residual)) max_ = std::numeric_limits<double>::infinity();
    sum_.add(residual);
    ++count_;
  }

  [[nodiscard]] CheckReport report(std::string name, std::string generator, double tolerance) const {
    CheckReport r;
    r.name = std::move(name);
    r.generator = std::move(generator);
    r.max_abs_residual = max_;
    r.mean_abs_residual = count_ ? sum_.value() / count_ : 0.0;
    r.tolerance = tolerance;
    r.sample_count = count_;
    r.passed = max_ <= tolerance;
    return r;
  }

 private:
  double max_ = 0.0;
  CompensatedSum sum_;
  int count_ = 0;
};

inline std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

inline Metadata window_metadata(const SampleWindow& w) {
  return {{"window.t", format_real(w.t_min) + "," + format_real(w.t_max)},
          {"window.r", format_real(w.r_min) + "," + format_real(w.r_max)},
          {"window.alpha", format_real(w.alpha_min) + "," + format_real(w.alpha_max)},
          {"window.beta", format_real(w.beta_min) + "," + format_real(w.beta_max)},
          {"seed", std::to_string(w.seed)}};
}

inline std::string method_name(PartialsMethod m) {
  return m == PartialsMethod::closed_form ? "closed-form-partials" : "finite-difference";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Pointwise residuals

/// Left-hand sides of the four CR-type equations:
///   u_t - v_r,  v_t + u_r,  v_alpha / sin(beta) + u_beta,  u_alpha / sin(beta) - v_beta.
inline std::array<double, 4> cr_residuals(const ComplexLikePair& f, const Quaternion& p) {
  const SphericalCoords c = to_spherical(p);
  if (c.r == 0.0) {
    throw Error(ErrorKind::real_axis_evaluation, "CR residuals of " + f.name() + " at r == 0");
  }
  const double sb = std::sin(c.beta);
  if (sb == 0.0) {
    throw Error(ErrorKind::pole_singularity, "CR residuals of " + f.name() + " at sin(beta) == 0");
  }
  const ChartJet j = f.jet(c);
  return {j.u_t() - j.v_r(), j.v_t() + j.u_r(), j.v_alpha() / sb + j.u_beta(), j.u_alpha() / sb - j.v_beta()};
}

inline double max_abs(const std::array<double, 4>& values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

/// |D_l f + 2 v / r|, zero exactly for hyperholomorphic f.
inline double hyperholomorphic_residual(const ComplexLikePair& f, const Quaternion& p,
                                        DerivativeRoute route = DerivativeRoute::chart_partials) {
  const SphericalCoords c = to_spherical(p);
  const Quaternion dl = fueter_left_cartesian(f, p, route).value;
  return norm(dl + Quaternion::real(2.0 * f.field(c).imag() / c.r));
}

/// |D_l(f / r^2) + (2 / r^3) u iota|, with f / r^2 built from closed-form
/// quotient-rule partials.
inline double cullen_lemma_residual(const ComplexLikePair& f, const Quaternion& p) {
  const SphericalCoords c = to_spherical(p);
  const ComplexLikePair scaled = cl_mul(f, make_inverse_r_squared());
  const Quaternion lhs = fueter_left_cartesian(scaled, p).value;
  // (2 / r^3) u iota = 2 u Im(p) / r^4
  const double r2 = c.r * c.r;
  return norm(lhs + p.imag() * (2.0 * f.field(c).real() / (r2 * r2)));
}

// ---------------------------------------------------------------------------
// Window suites

inline CheckReport cr_check(const ComplexLikePair& f, const SampleWindow& window, const Tolerances& tol = {}) {
  detail::ResidualAccumulator acc;
  for (const Quaternion& p : sample_points(window)) acc.add(max_abs(cr_residuals(f, p)));
  CheckReport r = acc.report("cr_residuals", f.name(), tol.first);
  r.metadata = detail::window_metadata(window);
  r.metadata.emplace_back("method", detail::method_name(f.method()));
  return r;
}

inline CheckReport hyperholomorphic_check(const ComplexLikePair& f, const SampleWindow& window,
                                          const Tolerances& tol = {}) {
  detail::ResidualAccumulator acc;
  for (const Quaternion& p : sample_points(window)) acc.add(hyperholomorphic_residual(f, p));
  CheckReport r = acc.report("hyperholomorphic", f.name(), tol.first);
  r.metadata = detail::window_metadata(window);
  r.metadata.emplace_back("method", detail::method_name(f.method()));
  return r;
}

inline CheckReport cullen_lemma_check(const ComplexLikePair& f, const SampleWindow& window,
                                      const Tolerances& tol = {}) {
  detail::ResidualAccumulator acc;
  for (const Quaternion& p : sample_points(window)) acc.add(cullen_lemma_residual(f, p));
  CheckReport r = acc.report("cullen_lemma", f.name(), tol.first);
  r.metadata = detail::window_metadata(window);
  r.metadata.emplace_back("method", detail::method_name(f.method()));
  return r;
}

/// Per-point verdict of the three hyperholomorphicity criteria.
enum class Indicator { satisfied, violated, indeterminate };

inline Indicator classify(double residual, const Tolerances& tol) {
  if (residual < tol.pass_band) return Indicator::satisfied;
  if (residual > tol.fail_band) return Indicator::violated;
  return Indicator::indeterminate;
}

/// Checks that CR residuals, the operator residual and the Cullen-lemma
/// residual agree point by point: all satisfied or all violated.
/// max_abs_residual is the fraction of points without agreement.
inline CheckReport equivalence_check(const ComplexLikePair& f, const SampleWindow& window,
                                     const Tolerances& tol = {}) {
  int satisfied = 0;
  int violated = 0;
  int indeterminate = 0;
  int disagreeing = 0;
  const auto points = sample_points(window);
  for (const Quaternion& p : points) {
    const std::array<Indicator, 3> verdicts = {classify(max_abs(cr_residuals(f, p)), tol),
                                               classify(hyperholomorphic_residual(f, p), tol),
                                               classify(cullen_lemma_residual(f, p), tol)};
    if (std::ranges::count(verdicts, Indicator::indeterminate) > 0) {
      ++indeterminate;
    } else if (std::ranges::count(verdicts, Indicator::satisfied) == 3) {
      ++satisfied;
    } else if (std::ranges::count(verdicts, Indicator::violated) == 3) {
      ++violated;
    } else {
      ++disagreeing;
    }
  }
  CheckReport r;
  r.name = "equivalence";
  r.generator = f.name();
  r.sample_count = static_cast<int>(points.size());
  r.max_abs_residual = points.empty() ? 0.0 : static_cast<double>(indeterminate + disagreeing) / points.size();
  r.mean_abs_residual = r.max_abs_residual;
  r.tolerance = tol.max_disagreement_fraction;
  r.passed = r.max_abs_residual <= r.tolerance;
  r.metadata = detail::window_metadata(window);
  r.metadata.emplace_back("all_satisfied", std::to_string(satisfied));
  r.metadata.emplace_back("all_violated", std::to_string(violated));
  r.metadata.emplace_back("indeterminate", std::to_string(indeterminate));
  r.metadata.emplace_back("disagreeing", std::to_string(disagreeing));
  r.metadata.emplace_back("bands", detail::format_real(tol.pass_band) + "/" + detail::format_real(tol.fail_band));
  return r;
}

/// Hyperholomorphic residuals of f + g, f g and 1/f (the inverse only where
/// u^2 + v^2 > 1e-6).
inline CheckReport closure_check(const ComplexLikePair& f, const ComplexLikePair& g, const SampleWindow& window,
                                 const Tolerances& tol = {}) {
  const ComplexLikePair sum = cl_add(f, g);
  const ComplexLikePair product = cl_mul(f, g);
  const ComplexLikePair inverse = cl_inv(f);
  detail::ResidualAccumulator acc;
  double input_residual = 0.0;
  int excluded = 0;
  for (const Quaternion& p : sample_points(window)) {
    input_residual = std::max({input_residual, hyperholomorphic_residual(f, p), hyperholomorphic_residual(g, p)});
    double residual = std::max(hyperholomorphic_residual(sum, p), hyperholomorphic_residual(product, p));
    const Complex w = f.field(to_spherical(p));
    if (std::norm(w) > 1e-6) {
      residual = std::max(residual, hyperholomorphic_residual(inverse, p));
    } else {
      ++excluded;
    }
    acc.add(residual);
  }
  CheckReport r = acc.report("closure", f.name() + " & " + g.name(), tol.first);
  r.metadata = detail::window_metadata(window);
  r.metadata.emplace_back("inputs_max_residual", detail::format_real(input_residual));
  r.metadata.emplace_back("inputs_hyperholomorphic", input_residual <= tol.first ? "true" : "false");
  r.metadata.emplace_back("inverse_excluded_points", std::to_string(excluded));
  return r;
}

/// max(|D_l Laplacian f|, |D_r Laplacian f|) over the window.
inline CheckReport fueter_theorem_check(const ComplexLikePair& f, const SampleWindow& window,
                                        const Tolerances& tol = {}) {
  detail::ResidualAccumulator acc;
  for (const Quaternion& p : sample_points(window)) {
    acc.add(std::max(norm(fueter_of_laplacian(f, p, Side::left).value),
                     norm(fueter_of_laplacian(f, p, Side::right).value)));
  }
  CheckReport r = acc.report("fueter_theorem", f.name(), tol.third);
  r.metadata = detail::window_metadata(window);
  r.metadata.emplace_back("method", "finite-difference");
  r.metadata.emplace_back("steps", detail::format_real(fd_step::second) + "/" + detail::format_real(fd_step::third) +
                                       "+richardson");
  return r;
}

// ---------------------------------------------------------------------------
// Integral theorem

struct IntegralReport {
  std::string generator;
  std::string region;
  QuadratureSpec spec;
  Side side = Side::left;
  Quaternion lhs;
  Quaternion rhs;
  /// int_{K*} D_l(f / r^2) dV
  Quaternion middle;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  /// Worst mismatch of the middle term against either side.
  double middle_abs_diff = 0.0;
  double middle_rel_diff = 0.0;
  double tolerance = 1e-6;
  double abs_tolerance = 1e-9;
  bool passed = false;
};

/// A mismatch passes when it is small relative to the reference or below the
/// absolute floor; the floor covers regions where both sides vanish by symmetry.
inline bool mismatch_within(double abs_diff, double rel_diff, double rel_tol, double abs_tol) {
  return rel_diff < rel_tol || abs_diff < abs_tol;
}

inline IntegralReport integral_theorem_check(const ComplexLikePair& f, const Region& region,
                                             const QuadratureSpec& spec = {}, Side side = Side::left,
                                             const Tolerances& tol = {}) {
  IntegralReport r;
  r.generator = f.name();
  r.region = region_text(region);
  r.spec = spec;
  r.side = side;
  r.lhs = side == Side::left ? lhs_integral(f, region, spec) : lhs_integral_right(f, region, spec);
  r.rhs = rhs_integral(f, region, spec);
  r.middle = chain_integral(f, region, spec);
  r.abs_diff = norm(r.lhs - r.rhs);
  r.rel_diff = relative_mismatch(r.lhs, r.rhs);
  r.middle_abs_diff = std::max(norm(r.middle - r.lhs), norm(r.middle - r.rhs));
  r.middle_rel_diff = std::max(relative_mismatch(r.middle, r.lhs), relative_mismatch(r.middle, r.rhs));
  r.tolerance = tol.second;
  r.abs_tolerance = tol.integral_abs;
  r.passed = mismatch_within(r.abs_diff, r.rel_diff, tol.second, tol.integral_abs) &&
             mismatch_within(r.middle_abs_diff, r.middle_rel_diff, 2.0 * tol.second, 2.0 * tol.integral_abs);
  return r;
}

struct ConvergenceRow {
  IntegralReport report;
  /// abs_diff of the previous spec over this one; NaN for the first row.
  double ratio = std::numeric_limits<double>::quiet_NaN();
  bool passed = true;
};

struct ConvergenceStudy {
  std::vector<ConvergenceRow> rows;
  double floor = 1e-11;
  double min_ratio = 4.0;
  bool passed = true;
};

/// Integral mismatch under successive specs. A refinement step must shrink
/// the mismatch by min_ratio unless the coarser value is already within
/// min_ratio of the floor.
inline ConvergenceStudy convergence_study(const ComplexLikePair& f, const Region& region,
                                          const std::vector<QuadratureSpec>& specs, const Tolerances& tol = {},
                                          double floor = 1e-11, double min_ratio = 4.0) {
  ConvergenceStudy study;
  study.floor = floor;
  study.min_ratio = min_ratio;
  for (const QuadratureSpec& spec : specs) {
    ConvergenceRow row;
    row.report = integral_theorem_check(f, region, spec, Side::left, tol);
    if (!study.rows.empty()) {
      const double previous = study.rows.back().report.abs_diff;
      row.ratio = previous / row.report.abs_diff;
      row.passed = previous <= min_ratio * floor || row.ratio >= min_ratio;
    }
    study.passed = study.passed && row.passed;
    study.rows.push_back(row);
  }
  return study;
}

/// Divergence-theorem comparison for `count` random polynomial fields of the
/// given degree; max_abs_residual is the worst relative mismatch.
inline CheckReport gauss_selftest(const Region& region, const QuadratureSpec& spec, int count, int degree,
                                  std::uint64_t seed, const Tolerances& tol = {}) {
  Rng rng(seed);
  detail::ResidualAccumulator acc;
  double worst_abs = 0.0;
  for (int k = 0; k < count; ++k) {
    const DivergenceField field = random_polynomial_field(degree, rng);
    const GaussComparison cmp = gauss_check(field, region, spec);
    acc.add(cmp.rel_diff);
    worst_abs = std::max(worst_abs, cmp.abs_diff);
  }
  CheckReport r = acc.report("gauss", "polynomial:" + std::to_string(degree), tol.gauss_rel);
  r.metadata = {{"region", region_text(region)},
                {"spec", spec_text(spec)},
                {"seed", std::to_string(seed)},
                {"max_abs_diff", detail::format_real(worst_abs)}};
  return r;
}

}  // namespace hyperholo
