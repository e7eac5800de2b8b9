#include "starkres/cap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace stark {

void EpsilonSchedule::validate() const {
    if (eps0 <= 0.0) throw std::invalid_argument("EpsilonSchedule: eps0 must be > 0");
    if (ratio <= 0.0 || ratio >= 1.0)
        throw std::invalid_argument("EpsilonSchedule: ratio must be in (0, 1)");
    if (count < 3) throw std::invalid_argument("EpsilonSchedule: count must be >= 3");
}

double EpsilonSchedule::eps(int j) const { return eps0 * std::pow(ratio, j); }

void Window::validate() const {
    if (!(re_min < re_max) || !(im_min < im_max))
        throw std::invalid_argument("Window: requires re_min < re_max, im_min < im_max");
}

namespace {

void canonical_sort(std::vector<Complex>& v) {
    std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

std::vector<Complex> windowed_eigenvalues(const ComplexBandedMatrix& A,
                                          const Window& window,
                                          const SolverConfig& cfg,
                                          std::vector<double>* residuals = nullptr) {
    std::vector<Complex> out;
    if (cfg.use_dense) {
        ComplexDenseMatrix D(A.n(), A.to_dense());
        const SpectrumResult full = dense_eigenvalues(D);
        for (std::size_t i = 0; i < full.eigenvalues.size(); ++i)
            if (window.contains(full.eigenvalues[i])) {
                out.push_back(full.eigenvalues[i]);
                if (residuals) residuals->push_back(full.residuals[i]);
            }
        return out;
    }
    const Complex sigma = window.centroid();
    double reach_needed = 0.0;
    for (double re : {window.re_min, window.re_max})
        for (double im : {window.im_min, window.im_max})
            reach_needed = std::max(reach_needed, std::abs(Complex(re, im) - sigma));
    int k = std::max(1, cfg.arnoldi_k);
    while (true) {
        const SpectrumResult res = shift_invert_arnoldi(A, sigma, k, cfg.tol);
        double reach = 0.0;
        for (Complex lambda : res.eigenvalues)
            reach = std::max(reach, std::abs(lambda - sigma));
        const bool covered = reach >= reach_needed ||
                             static_cast<int>(res.eigenvalues.size()) < k || k >= A.n();
        if (covered) {
            if (!res.converged)
                throw std::runtime_error("windowed_eigenvalues: Arnoldi did not converge");
            for (std::size_t i = 0; i < res.eigenvalues.size(); ++i)
                if (window.contains(res.eigenvalues[i])) {
                    out.push_back(res.eigenvalues[i]);
                    if (residuals) residuals->push_back(res.residuals[i]);
                }
            return out;
        }
        k = std::min(2 * k, A.n());
    }
}

void finalize_trajectory(Trajectory& t, double speed_threshold, bool accept_boundary) {
    const std::size_t p = t.points.size();
    t.speed.clear();
    for (std::size_t i = 1; i + 1 < p; ++i) {
        const double dlog = std::log(t.points[i - 1].first) - std::log(t.points[i + 1].first);
        t.speed.push_back(std::abs(t.points[i + 1].second - t.points[i - 1].second) / dlog);
    }
    if (t.status == TrajectoryStatus::lost) return;
    t.status = stabilize(t, speed_threshold, accept_boundary)
                   ? TrajectoryStatus::stabilized
                   : TrajectoryStatus::divergent;
}

}  // namespace

// Windowed eigenvalues of a banded operator by either solver path. The
// Arnoldi subspace is grown until the returned cloud provably covers the
// window (the farthest returned value lies beyond every window corner).
SpectrumResult windowed_spectrum(const ComplexBandedMatrix& A, const Window& window,
                                 const SolverConfig& cfg) {
    window.validate();
    SpectrumResult result;
    result.method = cfg.use_dense ? EigMethod::dense_qr : EigMethod::shift_invert_arnoldi;
    result.eigenvalues = windowed_eigenvalues(A, window, cfg, &result.residuals);
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

std::vector<Complex> windowed_cap_eigenvalues(const Grid1D& grid, const PotentialSpec& V,
                                              double eps, const Window& window,
                                              const SolverConfig& cfg) {
    const ComplexBandedMatrix A =
        assemble_cap_hamiltonian(grid, V, eps, cfg.fd_order, cfg.include_stark);
    std::vector<Complex> eigs = windowed_eigenvalues(A, window, cfg);
    canonical_sort(eigs);
    return eigs;
}

std::vector<Trajectory> sweep(const Grid1D& grid, const PotentialSpec& V,
                              const EpsilonSchedule& schedule, const Window& window,
                              const SolverConfig& cfg) {
    schedule.validate();
    window.validate();
    const double jump_cap = 0.5 * window.diagonal();

    std::vector<Trajectory> trajectories;
    std::vector<int> active;  // indices into trajectories
    for (int j = 0; j < schedule.count; ++j) {
        const double eps = schedule.eps(j);
        std::vector<Complex> eigs;
        bool solver_ok = true;
        try {
            eigs = windowed_cap_eigenvalues(grid, V, eps, window, cfg);
        } catch (const std::exception&) {
            solver_ok = false;
        }
        if (!solver_ok) {
            for (int idx : active) trajectories[idx].status = TrajectoryStatus::lost;
            active.clear();
            continue;
        }

        // Predicted positions: linear extrapolation once two points exist.
        std::vector<Complex> pred(active.size());
        for (std::size_t a = 0; a < active.size(); ++a) {
            const auto& pts = trajectories[active[a]].points;
            pred[a] = pts.size() >= 2 ? 2.0 * pts.back().second - pts[pts.size() - 2].second
                                      : pts.back().second;
        }

        // Greedy minimal-distance assignment with the jump cap.
        std::vector<bool> traj_used(active.size(), false), eig_used(eigs.size(), false);
        while (true) {
            double best = jump_cap;
            int ba = -1, be = -1;
            for (std::size_t a = 0; a < active.size(); ++a) {
                if (traj_used[a]) continue;
                for (std::size_t e = 0; e < eigs.size(); ++e) {
                    if (eig_used[e]) continue;
                    const double d = std::abs(eigs[e] - pred[a]);
                    if (d <= best) {
                        best = d;
                        ba = static_cast<int>(a);
                        be = static_cast<int>(e);
                    }
                }
            }
            if (ba < 0) break;
            traj_used[ba] = eig_used[be] = true;
            trajectories[active[ba]].points.emplace_back(eps, eigs[be]);
        }

        std::vector<int> next_active;
        for (std::size_t a = 0; a < active.size(); ++a) {
            if (traj_used[a])
                next_active.push_back(active[a]);
            else
                trajectories[active[a]].status = TrajectoryStatus::lost;
        }
        for (std::size_t e = 0; e < eigs.size(); ++e) {
            if (eig_used[e]) continue;
            Trajectory t;
            t.id = static_cast<int>(trajectories.size());
            t.start_step = j;
            t.points.emplace_back(eps, eigs[e]);
            trajectories.push_back(std::move(t));
            next_active.push_back(trajectories.back().id);
        }
        active = std::move(next_active);
    }

    for (Trajectory& t : trajectories)
        finalize_trajectory(t, cfg.speed_threshold, cfg.accept_boundary);
    return trajectories;
}

std::optional<ResonanceEstimate> stabilize(const Trajectory& t, double speed_threshold,
                                           bool accept_boundary) {
    if (t.points.size() < 3 || t.speed.empty()) return std::nullopt;
    const auto is_interior = [&](std::size_t i) { return i > 0 && i + 1 < t.speed.size(); };
    std::size_t best = 0;
    for (std::size_t i = 1; i < t.speed.size(); ++i) {
        // Strictly smaller wins; on ties prefer an interior index.
        if (t.speed[i] < t.speed[best] ||
            (t.speed[i] == t.speed[best] && is_interior(i) && !is_interior(best)))
            best = i;
    }
    const bool interior = is_interior(best);
    if (!interior && !accept_boundary) return std::nullopt;
    if (t.speed[best] >= speed_threshold) return std::nullopt;
    // speed[i] belongs to points[i + 1].
    ResonanceEstimate est;
    est.z = t.points[best + 1].second;
    est.eps_star = t.points[best + 1].first;
    est.uncertainty = t.speed[best];
    est.trajectory_id = t.id;
    return est;
}

SpectrumResult resonances_via_distortion(const Grid1D& grid, const PotentialSpec& V,
                                         Complex theta, const DistortionField& field,
                                         const Window& window, const SolverConfig& cfg) {
    window.validate();
    if (theta.imag() >= 0.0)
        throw std::invalid_argument("resonances_via_distortion: Im theta must be < 0");
    if (!(window.im_min > -std::abs(theta.imag())))
        throw std::invalid_argument(
            "resonances_via_distortion: window must satisfy im_min > -|Im theta|");
    const ComplexBandedMatrix A = assemble_distorted_hamiltonian(grid, V, theta, field);
    return windowed_spectrum(A, window, cfg);
}

MatchReport compare_with_distortion(const std::vector<ResonanceEstimate>& estimates,
                                    const SpectrumResult& reference, double match_tol) {
    MatchReport report;
    std::vector<bool> est_used(estimates.size(), false);
    std::vector<bool> ref_used(reference.eigenvalues.size(), false);
    while (true) {
        double best = match_tol;
        int be = -1, br = -1;
        for (std::size_t e = 0; e < estimates.size(); ++e) {
            if (est_used[e]) continue;
            for (std::size_t r = 0; r < reference.eigenvalues.size(); ++r) {
                if (ref_used[r]) continue;
                const double d = std::abs(estimates[e].z - reference.eigenvalues[r]);
                if (d <= best) {
                    best = d;
                    be = static_cast<int>(e);
                    br = static_cast<int>(r);
                }
            }
        }
        if (be < 0) break;
        est_used[be] = ref_used[br] = true;
        report.matched.push_back(
            {estimates[be].z, reference.eigenvalues[br], best});
    }
    for (std::size_t e = 0; e < estimates.size(); ++e)
        if (!est_used[e]) report.unmatched_estimates.push_back(estimates[e].z);
    for (std::size_t r = 0; r < reference.eigenvalues.size(); ++r)
        if (!ref_used[r]) report.unmatched_references.push_back(reference.eigenvalues[r]);
    report.pass = report.unmatched_references.empty();
    return report;
}

std::vector<std::vector<double>> resolvent_probe(Complex theta,
                                                 const DistortionField& field,
                                                 const std::vector<double>& eps_list,
                                                 const std::vector<Complex>& z_grid,
                                                 const Grid1D& grid) {
    const PotentialSpec zero = PotentialSpec::zero();
    std::vector<std::vector<double>> table;
    table.reserve(eps_list.size());
    for (double eps : eps_list) {
        const ComplexBandedMatrix A = assemble_cap_distorted(grid, zero, theta, field, eps);
        std::vector<double> row;
        row.reserve(z_grid.size());
        for (Complex z : z_grid) row.push_back(smallest_singular_value(A, z));
        table.push_back(std::move(row));
    }
    return table;
}

}  // namespace stark
