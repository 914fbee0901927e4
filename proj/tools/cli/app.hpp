#pragma once

// Command-line front end: configuration, the enhance/compare/bench runs and
// their JSON reports.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cce/pipeline.hpp"

namespace cce::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitIo = 2, kExitInvalidParameter = 3 };

/// A value parsed fine but lies outside its admissible range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EmitFlags {
  bool enhanced = true;
  bool blend = true;
  bool overlay = false;
  bool report = true;
};

struct RunConfig {
  std::filesystem::path virtual_path;
  /// A single image or a directory of frames.
  std::filesystem::path background_path;
  std::filesystem::path out_dir;
  /// Defaults to <out_dir>/report.json.
  std::optional<std::filesystem::path> report_path;
  PipelineConfig pipeline;
  std::vector<Method> methods{Method::kOurs};
  EmitFlags emit;
  bool bench = false;
  int bench_samples = 10;
  int bench_width = 1268;
  int bench_height = 720;

  /// Throws ParameterError.
  void validate() const;
};

/// Parses "SU,SV,BU,BV"; throws std::invalid_argument when malformed.
FovMapping parse_fov(const std::string& text);
/// Parses a comma-separated method list; throws ParameterError on unknown names.
std::vector<Method> parse_methods(const std::string& text);

/// Background frames in processing order: the file itself, or the PNGs of
/// a directory sorted lexicographically. Throws IoError.
std::vector<std::filesystem::path> list_frames(const std::filesystem::path& background);

nlohmann::json metrics_to_json(const MetricsReport& m, bool include_timing = true);
nlohmann::json params_to_json(const RunConfig& cfg);

/// All three runs read every input before writing anything, so a failure
/// leaves no partial outputs. They throw IoError or ParameterError and
/// return the report that was written.
nlohmann::json run_enhance(const RunConfig& cfg);
nlohmann::json run_compare(const RunConfig& cfg);
nlohmann::json run_bench(const RunConfig& cfg);

/// Parses arguments (plus an optional --config file) and dispatches.
/// Returns the process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace cce::cli
