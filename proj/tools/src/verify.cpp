#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "starkres_cli/commands.hpp"
#include "starkres/oracle.hpp"
#include "starkres/quadrature.hpp"

namespace stark::cli {

namespace {

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

void add(std::vector<Check>& checks, const std::string& name, bool pass,
         const std::string& detail) {
    checks.push_back({name, pass, detail});
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

// ---- lemma1 ---------------------------------------------------------------

std::vector<Check> suite_lemma1() {
    std::vector<Check> checks;
    const ConeParams params;  // K = 1, rho = 2, r = 1

    {
        const DistortionField f1 = build_field_1d(params);
        Halton2D halton;
        double worst_xv = -1e300, worst_v1 = 1e300;
        for (int i = 0; i < 100000; ++i) {
            const double x = -50.0 + 100.0 * halton.next().first;
            const double v = f1.v(x);
            worst_xv = std::max(worst_xv, x * v);
            worst_v1 = std::min(worst_v1, v);
        }
        add(checks, "1d: max x*v(x) <= 1e-8", worst_xv <= 1e-8, "max=" + fmt(worst_xv));
        add(checks, "1d: v >= 0 everywhere", worst_v1 >= -1e-8, "min=" + fmt(worst_v1));
    }
    {
        const DistortionField f2 = build_field_2d(params);
        Halton2D halton;
        double worst_xv = -1e300, worst_v1 = 1e300;
        for (int i = 0; i < 100000; ++i) {
            const auto q = halton.next();
            const Vec2 x{-50.0 + 100.0 * q.first, -50.0 + 100.0 * q.second};
            const Vec2 v = f2.v(x);
            worst_xv = std::max(worst_xv, x[0] * v[0] + x[1] * v[1]);
            worst_v1 = std::min(worst_v1, v[0]);
        }
        add(checks, "2d: max x.v(x) <= 1e-8", worst_xv <= 1e-8, "max=" + fmt(worst_xv));
        add(checks, "2d: v1 >= 0 everywhere", worst_v1 >= -1e-8, "min=" + fmt(worst_v1));
    }
    return checks;
}

// ---- oracles --------------------------------------------------------------

std::vector<Check> suite_oracles() {
    std::vector<Check> checks;
    {
        // Damped harmonic ray: -Laplacian - i x^2.
        const Grid1D grid(-15.0, 15.0, 1500);
        const ComplexBandedMatrix A =
            assemble_cap_hamiltonian(grid, PotentialSpec::zero(), 1.0, 2, false);
        const OracleSpectrum oracle = harmonic_cap_spectrum(1.0, 1, 5);
        const SpectrumResult res =
            shift_invert_arnoldi(A, Complex(0.0, 0.0), 5, 1e-8);
        double worst = 0.0;
        for (int k = 0; k < 5; ++k) {
            double best = 1e300;
            for (Complex lambda : res.eigenvalues)
                best = std::min(best, std::abs(lambda - oracle.eigenvalues[k]));
            worst = std::max(worst, best / std::abs(oracle.eigenvalues[k]));
        }
        add(checks, "harmonic ray levels 0..4, rel err < 1e-3", worst < 1e-3,
            "worst=" + fmt(worst));
    }
    {
        // Fully damped Stark: -Laplacian + x - i*eps*x^2, eps = 0.25.
        const Grid1D grid(-30.0, 30.0, 2400);
        const ComplexBandedMatrix A =
            assemble_cap_hamiltonian(grid, PotentialSpec::zero(), 0.25, 2, true);
        const OracleSpectrum oracle = free_stark_cap_spectrum(0.25, 1, 3);
        const SpectrumResult res =
            shift_invert_arnoldi(A, oracle.eigenvalues[1], 5, 1e-8);
        double worst = 0.0;
        for (int k = 0; k < 3; ++k) {
            double best = 1e300;
            for (Complex lambda : res.eigenvalues)
                best = std::min(best, std::abs(lambda - oracle.eigenvalues[k]));
            worst = std::max(worst, best / std::abs(oracle.eigenvalues[k]));
        }
        add(checks, "damped Stark levels 0..2, rel err < 1e-2", worst < 1e-2,
            "worst=" + fmt(worst));
    }
    return checks;
}

// ---- form_sign ------------------------------------------------------------

std::vector<Check> suite_form_sign() {
    std::vector<Check> checks;
    const Grid1D grid(-40.0, 15.0, 1000);
    const DistortionField field = build_field_1d(ConeParams{});
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (double delta : {0.1, 0.3}) {
        const ComplexBandedMatrix L =
            assemble_kinetic_distorted(grid, Complex(0.0, -delta), field);
        double worst = -1e300;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Complex> u(grid.m);
            double nrm2 = 0.0;
            for (Complex& c : u) {
                c = Complex(dist(rng), dist(rng));
                nrm2 += std::norm(c);
            }
            const std::vector<Complex> lu = L.matvec(u);
            Complex form(0.0);
            for (int i = 0; i < grid.m; ++i) form += std::conj(u[i]) * lu[i];
            worst = std::max(worst, form.imag() / nrm2);
        }
        char name[80];
        std::snprintf(name, sizeof name,
                      "delta=%.1f: Im<u,Lu> <= 1e-10*|u|^2 (100 vectors)", delta);
        add(checks, name, worst <= 1e-10, "max=" + fmt(worst));
    }
    return checks;
}

// ---- resolvent ------------------------------------------------------------

std::vector<Check> suite_resolvent() {
    std::vector<Check> checks;
    const Grid1D grid(-40.0, 15.0, 1375);
    const DistortionField field = build_field_1d(ConeParams{});
    const Complex theta(0.0, -0.3);
    const std::vector<double> eps_list{1e-1, 1e-2, 1e-3, 1e-4};
    std::vector<Complex> z_grid;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            z_grid.emplace_back(-1.0 + 2.0 * i / 4.0, -0.2 + 0.7 * j / 4.0);
    const auto table = resolvent_probe(theta, field, eps_list, z_grid, grid);
    double table_min = 1e300, small_eps_min = 1e300;
    for (std::size_t i = 0; i < table.size(); ++i)
        for (double s : table[i]) {
            table_min = std::min(table_min, s);
            if (i >= table.size() - 2) small_eps_min = std::min(small_eps_min, s);
        }
    add(checks, "min sigma_min over table > 0", table_min > 0.0, "min=" + fmt(table_min));
    add(checks, "no vanishing trend at small eps (within 50% of min)",
        small_eps_min <= 1.5 * table_min && small_eps_min >= table_min,
        "small-eps min=" + fmt(small_eps_min));
    return checks;
}

// ---- crossmethod ----------------------------------------------------------

std::vector<Check> suite_crossmethod() {
    std::vector<Check> checks;
    const PotentialSpec V = PotentialSpec::gaussian_well(2.0, 1.0, 0.0);
    const DistortionField field = build_field_1d(ConeParams{});
    SolverConfig arnoldi;
    arnoldi.use_dense = false;
    arnoldi.arnoldi_k = 12;
    arnoldi.tol = 1e-8;

    // Reference: distorted operator, window deep enough to hold the lowest
    // resonance of this well.
    const Window window{-2.0, 0.0, -0.42, -0.1};
    const Grid1D ref_grid(-240.0, 15.0, 12750);
    const SpectrumResult reference = resonances_via_distortion(
        ref_grid, V, Complex(0.0, -0.45), field, window, arnoldi);
    add(checks, "distorted reference nonempty", !reference.eigenvalues.empty(),
        "count=" + std::to_string(reference.eigenvalues.size()));

    // Damping sweep over the same window.
    const Grid1D cap_grid(-220.0, 15.0, 11750);
    const EpsilonSchedule schedule;  // 0.5 * 0.6^j, 20 steps
    const std::vector<Trajectory> trajectories =
        sweep(cap_grid, V, schedule, window, arnoldi);
    std::vector<ResonanceEstimate> estimates;
    for (const Trajectory& t : trajectories)
        if (auto est = stabilize(t, arnoldi.speed_threshold)) estimates.push_back(*est);
    add(checks, "sweep finds a stabilized trajectory", !estimates.empty(),
        "count=" + std::to_string(estimates.size()));

    const MatchReport report = compare_with_distortion(estimates, reference, 1e-3);
    double worst = 0.0;
    for (const auto& pair : report.matched) worst = std::max(worst, pair.distance);
    add(checks, "every reference matched within 1e-3", report.pass,
        "worst distance=" + fmt(worst));
    add(checks, "no unmatched stabilized estimate",
        report.unmatched_estimates.empty(),
        "unmatched=" + std::to_string(report.unmatched_estimates.size()));
    return checks;
}

int report(const std::string& suite, const std::vector<Check>& checks) {
    bool all = true;
    std::printf("suite %s\n", suite.c_str());
    for (const Check& c : checks) {
        std::printf("  [%s] %-55s %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.c_str());
        all = all && c.pass;
    }
    std::printf("suite %s: %s\n", suite.c_str(), all ? "PASS" : "FAIL");
    return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int cmd_verify(const std::string& suite) {
    if (suite == "lemma1") return report(suite, suite_lemma1());
    if (suite == "oracles") return report(suite, suite_oracles());
    if (suite == "form_sign") return report(suite, suite_form_sign());
    if (suite == "resolvent") return report(suite, suite_resolvent());
    if (suite == "crossmethod") return report(suite, suite_crossmethod());
    std::fprintf(stderr, "unknown verify suite: %s\n", suite.c_str());
    return kExitConfigError;
}

}  // namespace stark::cli
