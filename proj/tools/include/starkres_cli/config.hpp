#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "starkres/cap.hpp"
#include "starkres/distortion.hpp"
#include "starkres/grid.hpp"
#include "starkres/potential.hpp"

namespace stark::cli {

// Raised for any malformed configuration; the message names the offending key.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class OperatorKind { cap, distorted, cap_distorted };

struct RunConfig {
    // problem
    PotentialSpec potential = PotentialSpec::zero();
    OperatorKind op = OperatorKind::cap;
    bool include_stark = true;

    // grid
    Grid1D grid{-40.0, 15.0, 1000};
    int fd_order = 2;

    // method
    bool use_dense = true;
    int arnoldi_k = 12;
    double tol = 1e-8;

    // cap
    double eps = 1.0;  // single-eps runs (spectrum)
    EpsilonSchedule schedule;
    std::optional<Window> window;
    double speed_threshold = 1e-2;
    bool accept_boundary = false;

    // distortion
    ConeParams cone;
    double delta = 0.3;

    // output
    std::string prefix = "run";

    nlohmann::json raw;     // parsed document, echoed into outputs
    std::string hash;       // FNV-1a of the canonical dump

    SolverConfig solver() const {
        SolverConfig cfg;
        cfg.use_dense = use_dense;
        cfg.fd_order = fd_order;
        cfg.include_stark = include_stark;
        cfg.tol = tol;
        cfg.arnoldi_k = arnoldi_k;
        cfg.speed_threshold = speed_threshold;
        cfg.accept_boundary = accept_boundary;
        return cfg;
    }
};

// Parses and validates a JSON config file. Unknown keys are rejected with the
// full dotted key path in the error message.
RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_json(const nlohmann::json& doc);

// FNV-1a (64-bit, hex) of a string; configs are hashed on their canonical dump.
std::string fnv1a_hex(const std::string& data);

}  // namespace stark::cli
