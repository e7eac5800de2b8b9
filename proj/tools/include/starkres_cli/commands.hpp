#pragma once

#include <string>

#include "starkres_cli/config.hpp"

namespace stark::cli {

// Exit codes used across the tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitSolverFailure = 3;

// Single-eps spectrum run; writes <prefix>_spectrum.csv/.json into output_dir.
int cmd_spectrum(const RunConfig& cfg, const std::string& output_dir);

// Schedule sweep; writes <prefix>_trajectories.csv, <prefix>_estimates.json,
// <prefix>_sweep.svg into output_dir.
int cmd_sweep(const RunConfig& cfg, const std::string& output_dir);

// Named verification suite: lemma1, oracles, form_sign, resolvent, crossmethod.
int cmd_verify(const std::string& suite);

}  // namespace stark::cli
