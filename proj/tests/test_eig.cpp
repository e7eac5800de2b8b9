#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

#include "starkres/assemble.hpp"
#include "starkres/eig.hpp"
#include "starkres/oracle.hpp"

using namespace stark;

namespace {

ComplexDenseMatrix dense2(Complex a00, Complex a01, Complex a10, Complex a11) {
    ComplexDenseMatrix A(2);
    A(0, 0) = a00;
    A(0, 1) = a01;
    A(1, 0) = a10;
    A(1, 1) = a11;
    return A;
}

bool contains(const std::vector<Complex>& v, Complex z, double tol) {
    return std::any_of(v.begin(), v.end(),
                       [&](Complex w) { return std::abs(w - z) < tol; });
}

ComplexBandedMatrix random_banded(std::mt19937& rng, int n, int kl, int ku) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexBandedMatrix A(n, kl, ku);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (A.in_band(i, j)) A.set(i, j, Complex(dist(rng), dist(rng)));
    // Mild diagonal lift keeps the random instances comfortably nonsingular.
    for (int i = 0; i < n; ++i) A.set(i, i, A(i, i) + Complex(3.0, 1.0));
    return A;
}

double smallest_singular_dense(const ComplexBandedMatrix& A, Complex z) {
    const int n = A.n();
    std::vector<Complex> a = A.to_dense();
    for (int i = 0; i < n; ++i) a[i * n + i] -= z;
    std::vector<double> s(n), superb(n);
    LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'N', 'N', n, n,
                   reinterpret_cast<lapack_complex_double*>(a.data()), n, s.data(),
                   nullptr, 1, nullptr, 1, superb.data());
    return s[n - 1];
}

}  // namespace

TEST_CASE("dense eigenvalues: tiny closed-form instances") {
    {
        auto res = dense_eigenvalues(dense2(1.0, 0.0, 0.0, Complex(0.0, 2.0)));
        CHECK(contains(res.eigenvalues, Complex(1.0, 0.0), 1e-12));
        CHECK(contains(res.eigenvalues, Complex(0.0, 2.0), 1e-12));
    }
    {
        auto res = dense_eigenvalues(dense2(0.0, 1.0, -1.0, 0.0));
        CHECK(contains(res.eigenvalues, Complex(0.0, 1.0), 1e-12));
        CHECK(contains(res.eigenvalues, Complex(0.0, -1.0), 1e-12));
    }
}

TEST_CASE("dense eigenvalues: discrete harmonic oscillator levels") {
    // -u'' + x^2 u on [-12, 12]: odd integers 2k+1.
    const Grid1D grid(-12.0, 12.0, 1200);
    const double h2 = grid.h() * grid.h();
    ComplexDenseMatrix A(grid.m);
    for (int i = 0; i < grid.m; ++i) {
        const double x = grid.node(i);
        A(i, i) = 2.0 / h2 + x * x;
        if (i + 1 < grid.m) {
            A(i, i + 1) = -1.0 / h2;
            A(i + 1, i) = -1.0 / h2;
        }
    }
    auto res = dense_eigenvalues(A);
    std::vector<double> re;
    for (Complex z : res.eigenvalues) re.push_back(z.real());
    std::sort(re.begin(), re.end());
    for (int k = 0; k < 5; ++k)
        CHECK(std::abs(re[k] - (2 * k + 1)) / (2 * k + 1) < 1e-3);
}

TEST_CASE("dense eigenvalues: reported residuals hold") {
    std::mt19937 rng(7);
    const ComplexBandedMatrix A = random_banded(rng, 80, 2, 3);
    auto res = dense_eigenvalues(ComplexDenseMatrix(80, A.to_dense()));
    for (double r : res.residuals) CHECK(r < 1e-10);
}

TEST_CASE("dense eigenvalues: similarity invariance under diagonal scaling") {
    std::mt19937 rng(11);
    const int n = 60;
    const ComplexBandedMatrix A = random_banded(rng, n, 2, 2);
    const std::vector<Complex> a = A.to_dense();
    std::uniform_real_distribution<double> dist(0.5, 2.0);
    std::vector<double> d(n);
    for (double& x : d) x = dist(rng);
    ComplexDenseMatrix B(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) B(i, j) = a[j * n + i] * d[j] / d[i];
    auto ra = dense_eigenvalues(ComplexDenseMatrix(n, a));
    auto rb = dense_eigenvalues(B);
    for (Complex z : ra.eigenvalues) CHECK(contains(rb.eigenvalues, z, 1e-8));
}

TEST_CASE("banded LU: identity, discrete Poisson, and backward error") {
    {
        ComplexBandedMatrix I(5, 1, 1);
        for (int i = 0; i < 5; ++i) I.set(i, i, 1.0);
        BandedLU lu(I);
        std::vector<Complex> b{1.0, -2.0, Complex(0.0, 3.0), 4.0, 5.0};
        const auto x = lu.solve(b);
        for (int i = 0; i < 5; ++i) CHECK(std::abs(x[i] - b[i]) < 1e-14);
    }
    {
        // Tridiagonal {-1, 2, -1} with unit right-hand side has the parabolic
        // closed-form solution x_i = (i+1)(n-i)/2.
        const int n = 12;
        ComplexBandedMatrix T(n, 1, 1);
        for (int i = 0; i < n; ++i) {
            T.set(i, i, 2.0);
            if (i + 1 < n) {
                T.set(i, i + 1, -1.0);
                T.set(i + 1, i, -1.0);
            }
        }
        const auto x = BandedLU(T).solve(std::vector<Complex>(n, 1.0));
        for (int i = 0; i < n; ++i)
            CHECK(std::abs(x[i] - 0.5 * (i + 1.0) * (n - i)) < 1e-12);
    }
    {
        std::mt19937 rng(21);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (int inst = 0; inst < 20; ++inst) {
            const int n = 30 + inst * 7;
            const ComplexBandedMatrix A = random_banded(rng, n, 1 + inst % 4, 1 + inst % 3);
            std::vector<Complex> b(n);
            for (Complex& c : b) c = Complex(dist(rng), dist(rng));
            const auto x = BandedLU(A).solve(b);
            const auto ax = A.matvec(x);
            double num = 0.0, den = 0.0;
            for (int i = 0; i < n; ++i) {
                num += std::norm(ax[i] - b[i]);
                den += std::norm(b[i]);
            }
            CHECK(std::sqrt(num / den) < 1e-10);
        }
    }
}

TEST_CASE("banded LU: transpose and adjoint solves") {
    std::mt19937 rng(33);
    const int n = 40;
    const ComplexBandedMatrix A = random_banded(rng, n, 2, 1);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Complex> b(n);
    for (Complex& c : b) c = Complex(dist(rng), dist(rng));
    const BandedLU lu(A);
    const auto xh = lu.solve(b, 'C');
    const auto axh = A.adjoint().matvec(xh);
    double err = 0.0;
    for (int i = 0; i < n; ++i) err = std::max(err, std::abs(axh[i] - b[i]));
    CHECK(err < 1e-10);
}

TEST_CASE("banded LU: singularity is detected") {
    ComplexBandedMatrix A(2, 0, 0);
    A.set(0, 0, 1.0);
    A.set(1, 1, 0.0);
    BandedLU lu(A);
    CHECK(lu.singular());
    CHECK_THROWS_AS(lu.solve(std::vector<Complex>(2, 1.0)), std::runtime_error);
}

TEST_CASE("shift-invert Arnoldi: diagonal instances") {
    ComplexBandedMatrix A(4, 0, 0);
    A.set(0, 0, 1.0);
    A.set(1, 1, Complex(0.0, 2.0));
    A.set(2, 2, -3.0);
    A.set(3, 3, Complex(5.0, 1.0));
    {
        auto res = shift_invert_arnoldi(A, Complex(0.0, 2.1), 1, 1e-10);
        REQUIRE(res.eigenvalues.size() == 1);
        CHECK(std::abs(res.eigenvalues[0] - Complex(0.0, 2.0)) < 1e-10);
    }
    {
        auto res = shift_invert_arnoldi(A, Complex(0.0, 0.0), 2, 1e-10);
        REQUIRE(res.eigenvalues.size() == 2);
        CHECK(contains(res.eigenvalues, Complex(1.0, 0.0), 1e-10));
        CHECK(contains(res.eigenvalues, Complex(0.0, 2.0), 1e-10));
    }
}

TEST_CASE("shift-invert Arnoldi: shift on an eigenvalue is nudged") {
    ComplexBandedMatrix A(3, 0, 0);
    for (int i = 0; i < 3; ++i) A.set(i, i, 1.0 * (i + 1));
    auto res = shift_invert_arnoldi(A, Complex(2.0, 0.0), 1, 1e-10);
    REQUIRE(res.eigenvalues.size() == 1);
    CHECK(std::abs(res.eigenvalues[0] - 2.0) < 1e-8);
}

TEST_CASE("shift-invert Arnoldi matches dense on a damped operator") {
    const Grid1D grid(-15.0, 15.0, 1500);
    const ComplexBandedMatrix A =
        assemble_cap_hamiltonian(grid, PotentialSpec::zero(), 1.0, 2, false);
    auto arnoldi = shift_invert_arnoldi(A, Complex(0.7, -0.7), 3, 1e-8);
    auto dense = dense_eigenvalues(ComplexDenseMatrix(A.n(), A.to_dense()));
    REQUIRE(arnoldi.eigenvalues.size() == 3);
    for (Complex z : arnoldi.eigenvalues) CHECK(contains(dense.eigenvalues, z, 1e-6));
    for (double r : arnoldi.residuals) CHECK(r <= 1e-8);
}

TEST_CASE("smallest singular value: closed forms and dense SVD agreement") {
    {
        ComplexBandedMatrix I(6, 0, 0);
        for (int i = 0; i < 6; ++i) I.set(i, i, 1.0);
        CHECK(smallest_singular_value(I, Complex(0.0)) == doctest::Approx(1.0).epsilon(1e-6));
    }
    {
        ComplexBandedMatrix A(2, 0, 0);
        A.set(0, 0, 1.0);
        A.set(1, 1, 3.0);
        CHECK(smallest_singular_value(A, Complex(1.0)) == 0.0);  // eigenvalue hit
    }
    {
        std::mt19937 rng(5);
        const ComplexBandedMatrix A = random_banded(rng, 200, 1, 1);
        for (Complex z : {Complex(0.5, 0.2), Complex(2.0, -1.0), Complex(2.9, 0.9)}) {
            const double iterative = smallest_singular_value(A, z);
            const double direct = smallest_singular_dense(A, z);
            // The power iteration stops on a 1e-6 relative stall, so its true
            // accuracy can be a couple of orders looser.
            CHECK(iterative == doctest::Approx(direct).epsilon(1e-3));
        }
    }
}

TEST_CASE("smallest singular value decays toward a spectrum point") {
    std::mt19937 rng(9);
    const ComplexBandedMatrix A = random_banded(rng, 120, 1, 2);
    auto dense = dense_eigenvalues(ComplexDenseMatrix(120, A.to_dense()));
    const Complex target = dense.eigenvalues[0];
    double prev = 1e300;
    for (double t : {0.5, 0.25, 0.1, 0.02}) {
        const double s = smallest_singular_value(A, target + Complex(t, 0.0));
        CHECK(s < prev + 1e-12);
        prev = s;
    }
    CHECK(prev < 0.05);
}
