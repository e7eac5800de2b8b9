#include <complex>
#include <stdexcept>
#include <vector>

#include <cblas.h>
#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

#include "starkres/eig.hpp"

namespace stark {

namespace {
constexpr int kDenseCap = 4000;
}

SpectrumResult dense_eigenvalues(const ComplexDenseMatrix& A, double /*tol*/) {
    const int n = A.n();
    if (n > kDenseCap)
        throw std::invalid_argument("dense_eigenvalues: n exceeds dense cap 4000");
    SpectrumResult result;
    result.method = EigMethod::dense_qr;
    if (n == 0) return result;

    std::vector<Complex> a = A.storage();  // zgeev overwrites its input
    std::vector<Complex> w(n), vr(static_cast<std::size_t>(n) * n);
    const int info = LAPACKE_zgeev(
        LAPACK_COL_MAJOR, 'N', 'V', n,
        reinterpret_cast<lapack_complex_double*>(a.data()), n,
        reinterpret_cast<lapack_complex_double*>(w.data()), nullptr, 1,
        reinterpret_cast<lapack_complex_double*>(vr.data()), n);
    if (info < 0) throw std::invalid_argument("dense_eigenvalues: bad argument to QR");
    if (info > 0) result.converged = false;  // first info-1 values unconverged

    // Residuals ||A v - lambda v|| with unit eigenvectors, via one gemm.
    std::vector<Complex> av(static_cast<std::size_t>(n) * n);
    const Complex one(1.0, 0.0), zero(0.0, 0.0);
    cblas_zgemm(CblasColMajor, CblasNoTrans, CblasNoTrans, n, n, n, &one,
                A.storage().data(), n, vr.data(), n, &zero, av.data(), n);
    result.eigenvalues = w;
    result.residuals.resize(n);
    for (int j = 0; j < n; ++j) {
        double num = 0.0, den = 0.0;
        for (int i = 0; i < n; ++i) {
            const Complex r = av[static_cast<std::size_t>(j) * n + i] -
                              w[j] * vr[static_cast<std::size_t>(j) * n + i];
            num += std::norm(r);
            den += std::norm(vr[static_cast<std::size_t>(j) * n + i]);
        }
        result.residuals[j] = den > 0.0 ? std::sqrt(num / den) : 0.0;
    }
    return result;
}

}  // namespace stark
