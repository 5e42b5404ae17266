#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace polyproj {

/// One formula-vs-oracle comparison. `inputs` may carry "cmp": "le"/"ge"
/// for one-sided bounds; otherwise pass means |formula - oracle| <= tol.
struct VerifyCase {
  nlohmann::json inputs;
  double formula_value = 0.0;
  double oracle_value = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  bool operator==(const VerifyCase&) const = default;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<VerifyCase> cases;
  // Machine reports must be reproducible byte for byte, so wall time is
  // never stored here; the CLI reports elapsed time on the console instead.
  double wall_time_s = 0.0;

  bool passed() const;
  int pass_count() const;

  bool operator==(const VerificationReport&) const = default;
};

enum class Suite {
  simplex_hyperplane,
  cube_planar,
  duality,
  mahler,
  nazarov,
  lp_reduction,
  width,
  all,
};

Suite parse_suite(const std::string& name);
const char* suite_name(Suite suite);

/// Zero fields fall back to the suite defaults.
struct VerifyOptions {
  int n_lo = 0;
  int n_hi = 0;
  int trials = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

VerificationReport run_suite(Suite suite, const VerifyOptions& options);

nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

}  // namespace polyproj
