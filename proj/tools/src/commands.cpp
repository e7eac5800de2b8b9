#include "starkres_cli/commands.hpp"

#include <algorithm>
#include <iostream>

#include "starkres_cli/writers.hpp"

namespace stark::cli {

namespace {

ComplexBandedMatrix assemble_from_config(const RunConfig& cfg) {
    switch (cfg.op) {
        case OperatorKind::cap:
            return assemble_cap_hamiltonian(cfg.grid, cfg.potential, cfg.eps,
                                            cfg.fd_order, cfg.include_stark);
        case OperatorKind::distorted: {
            const DistortionField field = build_field_1d(cfg.cone);
            return assemble_distorted_hamiltonian(cfg.grid, cfg.potential,
                                                  Complex(0.0, -cfg.delta), field);
        }
        case OperatorKind::cap_distorted: {
            const DistortionField field = build_field_1d(cfg.cone);
            return assemble_cap_distorted(cfg.grid, cfg.potential,
                                          Complex(0.0, -cfg.delta), field, cfg.eps);
        }
    }
    throw std::logic_error("assemble_from_config: unreachable");
}

SpectrumResult full_dense_spectrum(const ComplexBandedMatrix& A) {
    ComplexDenseMatrix D(A.n(), A.to_dense());
    SpectrumResult result = dense_eigenvalues(D);
    std::vector<std::size_t> order(result.eigenvalues.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Complex za = result.eigenvalues[a], zb = result.eigenvalues[b];
        if (za.real() != zb.real()) return za.real() < zb.real();
        return za.imag() < zb.imag();
    });
    SpectrumResult sorted;
    sorted.method = result.method;
    sorted.converged = result.converged;
    for (std::size_t idx : order) {
        sorted.eigenvalues.push_back(result.eigenvalues[idx]);
        sorted.residuals.push_back(result.residuals[idx]);
    }
    return sorted;
}

std::string join_path(const std::string& dir, const std::string& file) {
    if (dir.empty()) return file;
    return dir.back() == '/' ? dir + file : dir + "/" + file;
}

}  // namespace

int cmd_spectrum(const RunConfig& cfg, const std::string& output_dir) {
    SpectrumResult spectrum;
    try {
        const ComplexBandedMatrix A = assemble_from_config(cfg);
        if (cfg.window) {
            spectrum = windowed_spectrum(A, *cfg.window, cfg.solver());
        } else {
            if (!cfg.use_dense)
                throw ConfigError("method.type arnoldi requires cap.window");
            spectrum = full_dense_spectrum(A);
        }
    } catch (const ConfigError&) {
        throw;  // caller maps to exit 2
    } catch (const std::invalid_argument&) {
        throw;  // precondition violations are config errors
    } catch (const std::exception& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitSolverFailure;
    }
    write_spectrum_csv(join_path(output_dir, cfg.prefix + "_spectrum.csv"), cfg, spectrum);
    write_spectrum_json(join_path(output_dir, cfg.prefix + "_spectrum.json"), cfg,
                        spectrum);
    return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, const std::string& output_dir) {
    if (!cfg.window) throw ConfigError("missing key: cap.window (required for sweep)");
    std::vector<Trajectory> trajectories;
    std::vector<ResonanceEstimate> estimates;
    try {
        trajectories = sweep(cfg.grid, cfg.potential, cfg.schedule, *cfg.window,
                             cfg.solver());
        for (const Trajectory& t : trajectories)
            if (auto est = stabilize(t, cfg.speed_threshold, cfg.accept_boundary))
                estimates.push_back(*est);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitSolverFailure;
    }
    write_trajectories_csv(join_path(output_dir, cfg.prefix + "_trajectories.csv"), cfg,
                           trajectories);
    write_estimates_json(join_path(output_dir, cfg.prefix + "_estimates.json"), cfg,
                         trajectories, estimates);
    write_sweep_svg(join_path(output_dir, cfg.prefix + "_sweep.svg"), cfg, *cfg.window,
                    trajectories, estimates);
    return kExitOk;
}

}  // namespace stark::cli
