#pragma once

#include <complex>
#include <vector>

#include "starkres/banded.hpp"

namespace stark {

enum class EigMethod { dense_qr, shift_invert_arnoldi };

// Eigenvalues with, where available, true residuals ||A v - lambda v|| / ||v||.
struct SpectrumResult {
    std::vector<std::complex<double>> eigenvalues;
    std::vector<double> residuals;
    EigMethod method = EigMethod::dense_qr;
    bool converged = true;  // false flags a partial result
};

// All eigenvalues of a dense complex matrix (QR algorithm), with residuals
// computed from the right eigenvectors. Throws on n > dense cap (4000).
SpectrumResult dense_eigenvalues(const ComplexDenseMatrix& A, double tol = 1e-10);

// LU factorization of a banded matrix with partial pivoting (band storage).
class BandedLU {
public:
    explicit BandedLU(const ComplexBandedMatrix& A);

    // Solves A x = b ('N'), A^T x = b ('T'), or A^H x = b ('C').
    std::vector<std::complex<double>> solve(const std::vector<std::complex<double>>& b,
                                            char trans = 'N') const;
    bool singular() const { return singular_; }
    int n() const { return n_; }

private:
    int n_, kl_, ku_;
    std::vector<std::complex<double>> ab_;
    std::vector<int> ipiv_;
    bool singular_ = false;
};

// k eigenvalues of A nearest sigma via restarted shift-invert Arnoldi.
// Returned values are sorted by |lambda - sigma|, ties by Im then Re.
SpectrumResult shift_invert_arnoldi(const ComplexBandedMatrix& A,
                                    std::complex<double> sigma, int k,
                                    double tol = 1e-10, int max_restarts = 80);

// sigma_min(A - zI) by inverse iteration on the normal equations using the
// banded LU of A - zI; returns 0 when z is numerically an eigenvalue.
double smallest_singular_value(const ComplexBandedMatrix& A, std::complex<double> z);

}  // namespace stark
