#include <cmath>
#include <stdexcept>

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

#include "starkres/eig.hpp"

namespace stark {

BandedLU::BandedLU(const ComplexBandedMatrix& A)
    : n_(A.n()), kl_(A.kl()), ku_(A.ku()), ab_(A.storage()), ipiv_(A.n()) {
    const int info = LAPACKE_zgbtrf(
        LAPACK_COL_MAJOR, n_, n_, kl_, ku_,
        reinterpret_cast<lapack_complex_double*>(ab_.data()), A.ldab(), ipiv_.data());
    if (info < 0) throw std::invalid_argument("BandedLU: bad argument to factorization");
    if (info > 0) {
        singular_ = true;
        return;
    }
    // Tiny-pivot guard: treat the factorization as singular when a diagonal of
    // U is negligible relative to ||A||.
    const double threshold = 1e-14 * A.one_norm();
    const int ldab = A.ldab();
    for (int j = 0; j < n_; ++j) {
        const Complex u_jj = ab_[static_cast<std::size_t>(j) * ldab + kl_ + ku_];
        if (std::abs(u_jj) < threshold) {
            singular_ = true;
            return;
        }
    }
}

std::vector<Complex> BandedLU::solve(const std::vector<Complex>& b, char trans) const {
    if (static_cast<int>(b.size()) != n_)
        throw std::invalid_argument("BandedLU::solve: size mismatch");
    if (singular_) throw std::runtime_error("BandedLU::solve: matrix is singular");
    if (trans != 'N' && trans != 'T' && trans != 'C')
        throw std::invalid_argument("BandedLU::solve: trans must be N, T or C");
    std::vector<Complex> x = b;
    const int ldab = 2 * kl_ + ku_ + 1;
    const int info = LAPACKE_zgbtrs(
        LAPACK_COL_MAJOR, trans, n_, kl_, ku_, 1,
        reinterpret_cast<const lapack_complex_double*>(ab_.data()), ldab, ipiv_.data(),
        reinterpret_cast<lapack_complex_double*>(x.data()), n_);
    if (info != 0) throw std::runtime_error("BandedLU::solve: substitution failed");
    return x;
}

}  // namespace stark
