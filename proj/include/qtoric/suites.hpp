// Named verification suites.  Each suite re-derives one family of algebraic
// identities straight from the library modules and reports a pass/fail item
// per identity (or per small batch of identities sharing one label).  By
// default a suite runs exactly, over formal phase units with rational
// coefficients; supplying a numeric deformation matrix re-runs the same
// identities in complex floating-point arithmetic and measures the largest
// residual |Delta| against a pinned tolerance.  Items are dispatched to a
// work pool and aggregated in construction order, so reports are
// deterministic regardless of the parallelism degree.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtoric/scalars.hpp"

namespace qtoric::suites {

// Residual bound for numeric runs.
inline constexpr double kNumericTol = 1e-9;
// Singular values of the Koszul pairing matrix must stay above this floor
// in the numeric full-rank certificates.
inline constexpr double kSingularValueFloor = 1e-6;

// Size caps and mode for one suite run.  Caps of 0 mean "suite default";
// values beyond a suite's supported bound raise std::invalid_argument.
struct RunConfig {
  std::optional<scalars::ThetaSpec> theta;  // numeric matrix -> numeric mode
  int n = 0;
  int d = 0;
  int deg = 0;
  int box = 0;
  int jobs = 1;
};

struct IdentityResult {
  std::string id;
  bool pass = false;
  std::string witness;  // failure detail, or max |Delta| on numeric runs
};

struct VerificationReport {
  std::string suite;
  std::string theta_mode;  // "symbolic" | "numeric"
  std::map<std::string, std::string> parameters;
  std::vector<IdentityResult> items;
  double elapsed_ms = 0.0;  // shown in text output only

  bool pass() const;
  int failures() const;
  std::string text() const;
  // Versioned report ("schema": "qtoric-report/1").  Timing is deliberately
  // omitted so identical configurations emit byte-identical documents.
  std::string json_text() const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs one named suite.  Throws std::invalid_argument on unknown names,
// caps beyond the supported bounds, or a deformation matrix whose size the
// suite cannot use.
VerificationReport run_suite(const std::string& name, const RunConfig& cfg);

// One worked example: a fan and the expected canonical chart presentation
// text per cone id.  The `examples` suite recomputes every chart and
// demands byte equality; the same texts are frozen as golden files.
struct WorkedExample {
  std::string name;
  std::string fan_json;
  std::vector<std::pair<int, std::string>> charts;
};
const std::vector<WorkedExample>& worked_examples();

}  // namespace qtoric::suites
