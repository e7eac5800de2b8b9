#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "starkres/assemble.hpp"
#include "starkres/eig.hpp"
#include "starkres/grid.hpp"
#include "starkres/potential.hpp"

using namespace stark;

namespace {

double max_entry_diff(const ComplexBandedMatrix& A, const ComplexBandedMatrix& B) {
    REQUIRE(A.n() == B.n());
    double worst = 0.0;
    for (int j = 0; j < A.n(); ++j)
        for (int i = 0; i < A.n(); ++i)
            worst = std::max(worst, std::abs(A(i, j) - B(i, j)));
    return worst;
}

}  // namespace

TEST_CASE("damped Hamiltonian: second-order stencil entries") {
    const Grid1D grid(-1.0, 1.0, 3);  // h = 0.5, nodes -0.5, 0, 0.5
    const double h2 = 0.25;
    const ComplexBandedMatrix A =
        assemble_cap_hamiltonian(grid, PotentialSpec::zero(), 0.0, 2, true);
    REQUIRE(A.n() == 3);
    for (int i = 0; i < 3; ++i) {
        const double x = grid.node(i);
        CHECK(std::abs(A(i, i) - Complex(2.0 / h2 + x, 0.0)) < 1e-14);
    }
    CHECK(std::abs(A(0, 1) + 1.0 / h2) < 1e-14);
    CHECK(std::abs(A(1, 0) + 1.0 / h2) < 1e-14);
    CHECK(std::abs(A(0, 2)) == 0.0);
}

TEST_CASE("damped Hamiltonian: absorbing term is purely imaginary diagonal") {
    const Grid1D grid(-3.0, 2.0, 40);
    const ComplexBandedMatrix A0 =
        assemble_cap_hamiltonian(grid, PotentialSpec::gaussian_well(2.0, 1.0), 0.0, 2);
    const ComplexBandedMatrix A1 =
        assemble_cap_hamiltonian(grid, PotentialSpec::gaussian_well(2.0, 1.0), 0.75, 2);
    for (int j = 0; j < A0.n(); ++j)
        for (int i = 0; i < A0.n(); ++i) {
            const Complex d = A1(i, j) - A0(i, j);
            if (i == j) {
                const double x = grid.node(i);
                CHECK(std::abs(d - Complex(0.0, -0.75 * x * x)) < 1e-12);
            } else {
                CHECK(std::abs(d) == 0.0);
            }
        }
}

TEST_CASE("damped Hamiltonian: adjoint flips the damping sign") {
    // A(eps)^H equals the matrix built from the same real part with +i eps x^2.
    const Grid1D grid(-5.0, 5.0, 60);
    const double eps = 0.3;
    const auto V = PotentialSpec::gaussian_well(1.0, 2.0);
    const ComplexBandedMatrix A = assemble_cap_hamiltonian(grid, V, eps, 2);
    ComplexBandedMatrix B = assemble_cap_hamiltonian(grid, V, 0.0, 2);
    for (int i = 0; i < B.n(); ++i) {
        const double x = grid.node(i);
        B.set(i, i, B(i, i) + Complex(0.0, eps * x * x));
    }
    CHECK(max_entry_diff(A.adjoint(), B) < 1e-14);
}

TEST_CASE("distorted Hamiltonian: theta = 0 reduces to the undamped operator") {
    const Grid1D grid(-8.0, 3.0, 100);
    const auto V = PotentialSpec::gaussian_well(2.0, 1.0);
    const DistortionField field = build_field_1d({1.0, 2.0, 1.0});
    const ComplexBandedMatrix A =
        assemble_distorted_hamiltonian(grid, V, Complex(0.0, 0.0), field);
    const ComplexBandedMatrix B = assemble_cap_hamiltonian(grid, V, 0.0, 2);
    CHECK(max_entry_diff(A, B) < 1e-12);
}

TEST_CASE("distorted Hamiltonian: field vanishing on the grid is invisible") {
    // With rho = 2 and unit bump radius the field is supported in x < -1; a
    // grid inside [-0.9, 3] never sees it regardless of theta.
    const Grid1D grid(-0.9, 3.0, 90);
    const auto V = PotentialSpec::gaussian_well(1.5, 0.8);
    const DistortionField field = build_field_1d({1.0, 2.0, 1.0});
    const ComplexBandedMatrix A =
        assemble_distorted_hamiltonian(grid, V, Complex(0.1, -0.3), field);
    const ComplexBandedMatrix B = assemble_cap_hamiltonian(grid, V, 0.0, 2);
    CHECK(max_entry_diff(A, B) < 1e-10);
}

TEST_CASE("distorted Hamiltonian is complex symmetric") {
    // The divergence-form discretization with midpoint coefficients must give
    // A = A^T exactly, for real and for complex deformation angles.
    const auto V = PotentialSpec::gaussian_well(2.0, 1.0);
    const Grid1D grid(-60.0, 5.0, 600);
    const DistortionField field = build_field_1d({1.0, 2.0, 1.0});
    for (Complex theta : {Complex(0.25, 0.0), Complex(0.0, -0.3), Complex(0.1, -0.2)}) {
        const ComplexBandedMatrix A =
            assemble_distorted_hamiltonian(grid, V, theta, field);
        double worst = 0.0;
        for (int i = 0; i + 1 < A.n(); ++i)
            worst = std::max(worst, std::abs(A(i, i + 1) - A(i + 1, i)));
        CHECK(worst == 0.0);
    }
}

TEST_CASE("distorted absorbing term damps: Re(-i eps x_theta^2) <= 0 nodewise") {
    const Grid1D grid(-60.0, 5.0, 800);
    const double delta = 0.3, eps = 0.2;
    const Complex theta(0.0, -delta);
    const DistortionField field = build_field_1d({1.0, 2.0, 1.0});
    const ComplexBandedMatrix A =
        assemble_distorted_hamiltonian(grid, PotentialSpec::zero(), theta, field);
    const ComplexBandedMatrix B =
        assemble_cap_distorted(grid, PotentialSpec::zero(), theta, field, eps);
    bool somewhere_active = false;
    for (int i = 0; i < A.n(); ++i) {
        const double x = grid.node(i);
        const Complex xt = x + theta * field.v(x);
        const Complex d = B(i, i) - A(i, i) - Complex(0.0, -eps) * xt * xt;
        CHECK(std::abs(d) < 1e-12);
        // The added term must never push the spectrum upward: Im term <= 0.
        CHECK((Complex(0.0, -eps) * xt * xt).imag() <= 1e-14);
        if (field.v(x) != 0.0) somewhere_active = true;
    }
    CHECK(somewhere_active);
}

TEST_CASE("distorted Hamiltonian rejects a degenerate Jacobian") {
    const Grid1D grid(-60.0, 5.0, 400);
    const DistortionField field = build_field_1d({1.0, 2.0, 1.0});
    // v' dips to about -1.17 at the bump center, so 1 + theta v' nearly
    // vanishes there for theta ~ 0.85.
    CHECK_THROWS_AS(assemble_distorted_hamiltonian(grid, PotentialSpec::zero(),
                                                   Complex(0.85, 0.0), field),
                    std::runtime_error);
}

TEST_CASE("stencil convergence orders on the harmonic ladder") {
    // Use the damped operator at eps = 1 without the linear term; its first
    // eigenvalue has the closed form sqrt(2)/2 (1 - i), so the discretization
    // error of each stencil can be measured directly.
    const Complex exact = std::sqrt(2.0) / 2.0 * Complex(1.0, -1.0);
    auto first_error = [&](int m, int order) {
        const Grid1D grid(-12.0, 12.0, m);
        const ComplexBandedMatrix A =
            assemble_cap_hamiltonian(grid, PotentialSpec::zero(), 1.0, order, false);
        const auto res = dense_eigenvalues(ComplexDenseMatrix(A.n(), A.to_dense()));
        double best = 1e300;
        for (Complex z : res.eigenvalues) best = std::min(best, std::abs(z - exact));
        return best;
    };
    const double e2a = first_error(300, 2), e2b = first_error(600, 2);
    const double e4a = first_error(300, 4), e4b = first_error(600, 4);
    const double r2 = e2a / e2b, r4 = e4a / e4b;
    CHECK(r2 > 3.0);   // ~4 for a second-order stencil
    CHECK(r2 < 5.5);
    CHECK(r4 > 10.0);  // ~16 for a fourth-order stencil
    CHECK(e4a < e2a);
}
