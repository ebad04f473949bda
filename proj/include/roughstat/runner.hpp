#pragma once

#include <string>
#include <utility>
#include <vector>

#include "roughstat/config.hpp"

namespace roughstat {

// Exit codes: 0 completed, 2 a theorem check failed (or axioms violated),
// 3 config or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 2;
inline constexpr int kExitConfigError = 3;

struct RunOutput {
  int exit_code = kExitOk;
  ordered_json report;
  // (filename, content) pairs; grid-scan modes emit plottable CSV.
  std::vector<std::pair<std::string, std::string>> csv_files;
};

RunOutput run_experiment(const ExperimentConfig& cfg);

}  // namespace roughstat
