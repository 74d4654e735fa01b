#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperholo/quaternion.hpp"
#include "hyperholo/regions.hpp"
#include "hyperholo/verify.hpp"

namespace hyperholo {

using Json = nlohmann::ordered_json;

inline Json to_json(const Quaternion& q) { return Json::array({q.w, q.x, q.y, q.z}); }

inline Json to_json(const QuadratureSpec& s) {
  return Json{{"n_theta", s.n_theta}, {"n_alpha", s.n_alpha}, {"n_beta", s.n_beta}, {"n_radial", s.n_radial},
              {"panels", s.panels}};
}

inline Json to_json(const Region& region) {
  return std::visit(
      [](const auto& g) -> Json {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, TorusRegion>) {
          return Json{{"kind", "torus"}, {"t0", g.t0}, {"r0", g.r0}, {"rho", g.rho}};
        } else {
          return Json{{"kind", "sphere"}, {"center", to_json(g.center)}, {"rho", g.rho}};
        }
      },
      region);
}

/// NaN and infinities have no JSON literal; they become null.
inline Json real_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

inline Json to_json(const CheckReport& r) {
  Json meta = Json::object();
  for (const auto& [key, value] : r.metadata) meta[key] = value;
  return Json{{"type", "check"},
              {"name", r.name},
              {"generator", r.generator},
              {"max_abs_residual", real_or_null(r.max_abs_residual)},
              {"mean_abs_residual", real_or_null(r.mean_abs_residual)},
              {"tolerance", r.tolerance},
              {"sample_count", r.sample_count},
              {"passed", r.passed},
              {"metadata", meta}};
}

inline Json to_json(const IntegralReport& r) {
  return Json{{"type", "integral"},
              {"generator", r.generator},
              {"side", r.side == Side::left ? "left" : "right"},
              {"lhs", to_json(r.lhs)},
              {"rhs", to_json(r.rhs)},
              {"middle", to_json(r.middle)},
              {"abs_diff", real_or_null(r.abs_diff)},
              {"rel_diff", real_or_null(r.rel_diff)},
              {"middle_abs_diff", real_or_null(r.middle_abs_diff)},
              {"middle_rel_diff", real_or_null(r.middle_rel_diff)},
              {"tolerance", r.tolerance},
              {"abs_tolerance", r.abs_tolerance},
              {"passed", r.passed},
              {"spec", to_json(r.spec)},
              {"region", r.region}};
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string format_shortest(double v) {
  if (std::isnan(v)) return "nan";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

/// One summary row: name, max_residual, tolerance, passed.
struct SummaryRow {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

inline std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::string out = "name,max_residual,tolerance,passed\n";
  for (const SummaryRow& row : rows) {
    out += csv_field(row.name) + "," + format_shortest(row.max_residual) + "," + format_shortest(row.tolerance) + "," +
           (row.passed ? "true" : "false") + "\n";
  }
  return out;
}

/// Table with header "spec,abs_diff,ratio"; the first ratio is empty.
inline std::string convergence_csv(const ConvergenceStudy& study) {
  std::string out = "spec,abs_diff,ratio\n";
  for (const ConvergenceRow& row : study.rows) {
    out += spec_text(row.report.spec) + "," + format_shortest(row.report.abs_diff) + "," +
           (std::isnan(row.ratio) ? std::string() : format_shortest(row.ratio)) + "\n";
  }
  return out;
}

/// Writes via a temporary file and rename so readers never see a partial file.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) {
      throw std::runtime_error("cannot write " + tmp.string());
    }
    os << content;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hyperholo
