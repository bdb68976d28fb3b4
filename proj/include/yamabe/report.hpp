#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "yamabe/run_config.hpp"

namespace yamabe {

inline constexpr const char* kToolName = "yamabe-check";
inline constexpr const char* kToolVersion = YAMABE_VERSION;

using Json = nlohmann::ordered_json;

struct SurfaceOutcome {
  std::string name;
  int comparisons = 0;
  int failures = 0;
  bool errored = false;
  std::string error;
  double wall_time_s = 0;

  bool passed() const { return failures == 0 && !errored; }
};

struct RunResult {
  Json report;
  std::vector<SurfaceOutcome> outcomes;

  bool passed() const;
  /// 0 when every comparison passed and no surface errored, else 1.
  int exit_code() const;
};

/// Samples every configured surface, runs the selected checks and compares
/// against the catalog expectations. Per-surface failures are recorded in the
/// report rather than thrown.
RunResult run(const RunConfig& config);

/// Two-space indented JSON with every real printed as %.17g; non-finite reals
/// become null.
std::string to_json_text(const Json& j);

/// One line per surface plus a totals line.
std::string summary_text(const RunResult& r);

}  // namespace yamabe
