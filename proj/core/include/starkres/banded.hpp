#pragma once

#include <complex>
#include <vector>

namespace stark {

using Complex = std::complex<double>;

// Complex banded matrix in LAPACK band storage (column major, ldab = 2*kl+ku+1,
// with kl extra rows reserved for pivoting fill-in so the storage can be handed
// to zgbtrf unchanged). Entries outside the band are identically zero.
class ComplexBandedMatrix {
public:
    ComplexBandedMatrix(int n, int kl, int ku);

    int n() const { return n_; }
    int kl() const { return kl_; }
    int ku() const { return ku_; }
    int ldab() const { return 2 * kl_ + ku_ + 1; }

    bool in_band(int i, int j) const {
        return i - j <= kl_ && j - i <= ku_;
    }
    Complex operator()(int i, int j) const;
    void set(int i, int j, Complex value);

    void matvec(const Complex* x, Complex* y) const;
    std::vector<Complex> matvec(const std::vector<Complex>& x) const;

    // Dense column-major expansion; round-trips band storage exactly.
    std::vector<Complex> to_dense() const;

    // Conjugate transpose (kl and ku swap roles).
    ComplexBandedMatrix adjoint() const;

    // Adds value to the (i,i) entry for all i (used for shifts A - sigma*I).
    void shift_diagonal(Complex value);

    double one_norm() const;

    const std::vector<Complex>& storage() const { return ab_; }
    std::vector<Complex>& storage() { return ab_; }

private:
    int n_, kl_, ku_;
    std::vector<Complex> ab_;
};

// Dense complex matrix, column major. Construction rejects non-finite entries.
class ComplexDenseMatrix {
public:
    explicit ComplexDenseMatrix(int n);
    ComplexDenseMatrix(int n, std::vector<Complex> entries);

    int n() const { return n_; }
    Complex operator()(int i, int j) const { return a_[static_cast<std::size_t>(j) * n_ + i]; }
    Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(j) * n_ + i]; }

    const std::vector<Complex>& storage() const { return a_; }
    std::vector<Complex>& storage() { return a_; }

private:
    void check_finite() const;
    int n_;
    std::vector<Complex> a_;
};

}  // namespace stark
