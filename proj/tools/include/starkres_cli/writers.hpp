#pragma once

#include <string>
#include <vector>

#include "starkres_cli/config.hpp"

namespace stark::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kFormatVersion = 1;

// 17 significant digits, locale-independent.
std::string format_double(double x);

void write_spectrum_csv(const std::string& path, const RunConfig& cfg,
                        const SpectrumResult& spectrum);
void write_spectrum_json(const std::string& path, const RunConfig& cfg,
                         const SpectrumResult& spectrum);

void write_trajectories_csv(const std::string& path, const RunConfig& cfg,
                            const std::vector<Trajectory>& trajectories);
void write_estimates_json(const std::string& path, const RunConfig& cfg,
                          const std::vector<Trajectory>& trajectories,
                          const std::vector<ResonanceEstimate>& estimates);
void write_sweep_svg(const std::string& path, const RunConfig& cfg, const Window& window,
                     const std::vector<Trajectory>& trajectories,
                     const std::vector<ResonanceEstimate>& estimates);

}  // namespace stark::cli
