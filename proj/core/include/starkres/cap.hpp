#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "starkres/assemble.hpp"
#include "starkres/eig.hpp"

namespace stark {

// Geometric damping schedule eps_j = eps0 * ratio^j, j = 0..count-1.
struct EpsilonSchedule {
    double eps0 = 0.5;
    double ratio = 0.6;
    int count = 20;

    void validate() const;
    double eps(int j) const;
};

// Rectangular spectral window in the complex plane.
struct Window {
    double re_min, re_max, im_min, im_max;

    void validate() const;
    bool contains(Complex z) const {
        return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min &&
               z.imag() <= im_max;
    }
    Complex centroid() const {
        return {0.5 * (re_min + re_max), 0.5 * (im_min + im_max)};
    }
    double diagonal() const {
        return std::hypot(re_max - re_min, im_max - im_min);
    }
};

enum class TrajectoryStatus { stabilized, divergent, lost };

// One branch of the damped spectrum followed along the schedule.
struct Trajectory {
    int id = 0;
    int start_step = 0;                              // schedule index of first point
    std::vector<std::pair<double, Complex>> points;  // (eps, lambda), eps decreasing
    std::vector<double> speed;  // |eps * d lambda / d eps|, centered in log eps
    TrajectoryStatus status = TrajectoryStatus::divergent;
};

struct ResonanceEstimate {
    Complex z;
    double eps_star = 0.0;      // eps at minimal speed
    double uncertainty = 0.0;   // the minimal speed value
    int trajectory_id = 0;
};

struct SolverConfig {
    bool use_dense = true;   // dense QR path; otherwise shift-invert Arnoldi
    int fd_order = 2;
    bool include_stark = true;
    double tol = 1e-8;       // Arnoldi residual tolerance
    int arnoldi_k = 12;      // initial subspace size, doubled until coverage
    double speed_threshold = 1e-2;
    bool accept_boundary = false;  // accept speed minima at schedule endpoints
};

// Windowed eigenvalues (with residuals) of an assembled operator, by the
// dense path or by shift-invert Arnoldi grown until it covers the window.
// Results are sorted canonically by (Re, Im).
SpectrumResult windowed_spectrum(const ComplexBandedMatrix& A, const Window& window,
                                 const SolverConfig& cfg);

// Windowed eigenvalues of one damped operator (helper shared by sweep/CLI).
std::vector<Complex> windowed_cap_eigenvalues(const Grid1D& grid, const PotentialSpec& V,
                                              double eps, const Window& window,
                                              const SolverConfig& cfg);

// Follows the damped spectrum along the schedule and links it into
// trajectories (greedy nearest-neighbor on extrapolated predictions with a
// jump cap of half the window diagonal).
std::vector<Trajectory> sweep(const Grid1D& grid, const PotentialSpec& V,
                              const EpsilonSchedule& schedule, const Window& window,
                              const SolverConfig& cfg);

// Minimal-logarithmic-speed detector. Returns the estimate when the speed
// minimum is interior to the trajectory and below the threshold; when
// `accept_boundary` is set, endpoint minima qualify as well.
std::optional<ResonanceEstimate> stabilize(const Trajectory& t, double speed_threshold,
                                           bool accept_boundary = false);

// Reference resonances: windowed eigenvalues of the distorted operator.
SpectrumResult resonances_via_distortion(const Grid1D& grid, const PotentialSpec& V,
                                         Complex theta, const DistortionField& field,
                                         const Window& window,
                                         const SolverConfig& cfg = {});

struct MatchReport {
    struct Pair {
        Complex estimate;
        Complex reference;
        double distance;
    };
    std::vector<Pair> matched;
    std::vector<Complex> unmatched_estimates;
    std::vector<Complex> unmatched_references;
    bool pass = false;  // every reference matched within tolerance
};

MatchReport compare_with_distortion(const std::vector<ResonanceEstimate>& estimates,
                                    const SpectrumResult& reference, double match_tol);

// sigma_min(Q_{eps,theta} - z) over the (eps, z) product grid; entry [i][j]
// corresponds to eps_list[i], z_grid[j].
std::vector<std::vector<double>> resolvent_probe(Complex theta,
                                                 const DistortionField& field,
                                                 const std::vector<double>& eps_list,
                                                 const std::vector<Complex>& z_grid,
                                                 const Grid1D& grid);

}  // namespace stark
