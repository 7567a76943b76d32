#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "reclearn/model.hpp"

namespace reclearn {

/// Full run configuration: model constants, solver and simulation knobs,
/// and the mechanism switches. Precedence is CLI > config file > defaults.
struct RunConfig {
  Params params;

  double initial_belief = 0.5;  // also the distribution of X_1
  long burn_in = 10000;

  /// Pay on the set where team and strategic policies differ (default).
  /// false pays on the agreement set instead.
  bool pay_on_difference_set = true;
  /// Extra payment on top of the exact report cost; 0 leaves the user
  /// indifferent and the reporting-favored tie-break decides.
  double extra_bonus_delta = 0.0;
  /// Simulate with nearest-grid policy lookup instead of exact-belief
  /// recomputation.
  bool grid_snap_lookup = false;

  std::string out_dir = "out";
};

struct ConfigViolation {
  std::string field;
  std::string value;
  std::string constraint;
};

std::string describe(const ConfigViolation& violation);

/// Empty iff every invariant holds. Never throws.
std::vector<ConfigViolation> validate_config(const RunConfig& config);

enum class PipelineStage { solve, strategic, mechanism, simulate, all };

/// Exit codes shared by run_pipeline and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigInvalid = 1;
inline constexpr int kExitSolverFailed = 2;
inline constexpr int kExitIoFailure = 3;

/// Run the pipeline up to `stage` and write the stage's artifacts into
/// config.out_dir. On failure the files written by this invocation are
/// removed. Returns one of the exit codes above.
int run_pipeline(const RunConfig& config,
                 PipelineStage stage = PipelineStage::all);

/// Parse a flat JSON config file; unknown keys are an error. Fields not
/// present keep their defaults.
RunConfig load_config_file(const std::filesystem::path& path);

/// The exact JSON object echoed into run_metadata.json.
std::string config_to_json_string(const RunConfig& config);

}  // namespace reclearn
