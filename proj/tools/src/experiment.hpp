#pragma once

#include <iosfwd>

#include "config.hpp"

namespace gals::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;      // validation or parse failure
inline constexpr int kExitViolation = 2;  // statistical contradiction of a guarantee

/// Runs one configured experiment: builds the instance, resolves parameters
/// (planner or manual), dispatches on mode, and emits the result table to
/// config.out (or `out` when no path is set). Human-readable summaries go to
/// `out`, diagnostics to `err`. All randomness derives from config.seed.
int run_experiment(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gals::cli
