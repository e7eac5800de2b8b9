#include "starkres/assemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace stark {

using cplx = std::complex<double>;

ComplexBandedMatrix assemble_cap_hamiltonian(const Grid1D& grid, const PotentialSpec& V,
                                             double eps, int fd_order,
                                             bool include_stark) {
    if (eps < 0.0) throw std::invalid_argument("assemble_cap_hamiltonian: eps < 0");
    if (fd_order != 2 && fd_order != 4)
        throw std::invalid_argument("assemble_cap_hamiltonian: fd_order must be 2 or 4");
    const int m = grid.m;
    const double h2 = grid.h() * grid.h();
    const int bw = (fd_order == 2) ? 1 : 2;
    ComplexBandedMatrix A(m, bw, bw);
    for (int i = 0; i < m; ++i) {
        const double x = grid.node(i);
        cplx diag = V.eval_real(x) - cplx(0.0, eps * x * x);
        if (include_stark) diag += x;
        if (fd_order == 2) {
            A.set(i, i, diag + 2.0 / h2);
            if (i + 1 < m) {
                A.set(i, i + 1, -1.0 / h2);
                A.set(i + 1, i, -1.0 / h2);
            }
        } else {
            A.set(i, i, diag + 2.5 / h2);
            if (i + 1 < m) {
                A.set(i, i + 1, -4.0 / (3.0 * h2));
                A.set(i + 1, i, -4.0 / (3.0 * h2));
            }
            if (i + 2 < m) {
                A.set(i, i + 2, 1.0 / (12.0 * h2));
                A.set(i + 2, i, 1.0 / (12.0 * h2));
            }
        }
    }
    return A;
}

namespace {

// Curvature correction of the change of variables x -> x + theta*v(x):
// with J = 1 + theta*v', the 1d reduction collapses to
//   r = (1/2) J''/J^3 - (5/4) (J')^2 / J^4.
cplx curvature_term(cplx theta, const DistortionField& field, double x) {
    const cplx J = 1.0 + theta * field.dv(x);
    const cplx Jp = theta * field.d2v(x);
    const cplx Jpp = theta * field.d3v(x);
    const cplx J2 = J * J;
    return 0.5 * Jpp / (J * J2) - 1.25 * Jp * Jp / (J2 * J2);
}

void check_jacobian(const Grid1D& grid, cplx theta, const DistortionField& field) {
    double min_abs = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid.m; ++i)
        min_abs = std::min(min_abs, std::abs(1.0 + theta * field.dv(grid.node(i))));
    for (int i = 0; i <= grid.m; ++i)
        min_abs = std::min(min_abs, std::abs(1.0 + theta * field.dv(grid.midpoint(i))));
    if (min_abs < 0.1)
        throw std::runtime_error(
            "assemble_distorted_hamiltonian: singular Jacobian, min|1 + theta*v'| = " +
            std::to_string(min_abs));
}

// Shared core: -D g D (+ optional diagonal terms supplied by the caller).
template <class DiagFn>
ComplexBandedMatrix assemble_div_form(const Grid1D& grid, cplx theta,
                                      const DistortionField& field,
                                      const DiagFn& extra_diag) {
    check_jacobian(grid, theta, field);
    const int m = grid.m;
    const double h2 = grid.h() * grid.h();
    std::vector<cplx> g_mid(m + 1);
    for (int i = 0; i <= m; ++i) {
        const cplx J = 1.0 + theta * field.dv(grid.midpoint(i));
        g_mid[i] = 1.0 / (J * J);
    }
    ComplexBandedMatrix A(m, 1, 1);
    for (int i = 0; i < m; ++i) {
        A.set(i, i, (g_mid[i] + g_mid[i + 1]) / h2 + extra_diag(grid.node(i)));
        if (i + 1 < m) {
            A.set(i, i + 1, -g_mid[i + 1] / h2);
            A.set(i + 1, i, -g_mid[i + 1] / h2);
        }
    }
    return A;
}

}  // namespace

ComplexBandedMatrix assemble_distorted_hamiltonian(const Grid1D& grid,
                                                   const PotentialSpec& V,
                                                   cplx theta,
                                                   const DistortionField& field) {
    return assemble_div_form(grid, theta, field, [&](double x) {
        const cplx x_theta = x + theta * field.v(x);
        return curvature_term(theta, field, x) + x_theta + V.eval_complex(x_theta);
    });
}

ComplexBandedMatrix assemble_cap_distorted(const Grid1D& grid, const PotentialSpec& V,
                                           cplx theta, const DistortionField& field,
                                           double eps) {
    if (eps < 0.0) throw std::invalid_argument("assemble_cap_distorted: eps < 0");
    return assemble_div_form(grid, theta, field, [&](double x) {
        const cplx x_theta = x + theta * field.v(x);
        return curvature_term(theta, field, x) + x_theta + V.eval_complex(x_theta) -
               cplx(0.0, eps) * x_theta * x_theta;
    });
}

ComplexBandedMatrix assemble_kinetic_distorted(const Grid1D& grid, cplx theta,
                                               const DistortionField& field) {
    return assemble_div_form(grid, theta, field, [](double) { return cplx(0.0); });
}

}  // namespace stark
