#include "starkres/banded.hpp"

#include <cmath>
#include <stdexcept>

namespace stark {

ComplexBandedMatrix::ComplexBandedMatrix(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku) {
    if (n < 1 || kl < 0 || ku < 0)
        throw std::invalid_argument("ComplexBandedMatrix: invalid dimensions");
    ab_.assign(static_cast<std::size_t>(ldab()) * n, Complex{0.0, 0.0});
}

Complex ComplexBandedMatrix::operator()(int i, int j) const {
    if (!in_band(i, j)) return {0.0, 0.0};
    return ab_[static_cast<std::size_t>(j) * ldab() + (kl_ + ku_ + i - j)];
}

void ComplexBandedMatrix::set(int i, int j, Complex value) {
    if (!in_band(i, j))
        throw std::out_of_range("ComplexBandedMatrix::set outside band");
    ab_[static_cast<std::size_t>(j) * ldab() + (kl_ + ku_ + i - j)] = value;
}

void ComplexBandedMatrix::matvec(const Complex* x, Complex* y) const {
    for (int i = 0; i < n_; ++i) y[i] = Complex{0.0, 0.0};
    for (int j = 0; j < n_; ++j) {
        const int i0 = std::max(0, j - ku_), i1 = std::min(n_ - 1, j + kl_);
        const Complex xj = x[j];
        for (int i = i0; i <= i1; ++i)
            y[i] += ab_[static_cast<std::size_t>(j) * ldab() + (kl_ + ku_ + i - j)] * xj;
    }
}

std::vector<Complex> ComplexBandedMatrix::matvec(const std::vector<Complex>& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw std::invalid_argument("matvec: size mismatch");
    std::vector<Complex> y(n_);
    matvec(x.data(), y.data());
    return y;
}

std::vector<Complex> ComplexBandedMatrix::to_dense() const {
    std::vector<Complex> d(static_cast<std::size_t>(n_) * n_, Complex{0.0, 0.0});
    for (int j = 0; j < n_; ++j) {
        const int i0 = std::max(0, j - ku_), i1 = std::min(n_ - 1, j + kl_);
        for (int i = i0; i <= i1; ++i) d[static_cast<std::size_t>(j) * n_ + i] = (*this)(i, j);
    }
    return d;
}

ComplexBandedMatrix ComplexBandedMatrix::adjoint() const {
    ComplexBandedMatrix at(n_, ku_, kl_);
    for (int j = 0; j < n_; ++j) {
        const int i0 = std::max(0, j - ku_), i1 = std::min(n_ - 1, j + kl_);
        for (int i = i0; i <= i1; ++i) at.set(j, i, std::conj((*this)(i, j)));
    }
    return at;
}

void ComplexBandedMatrix::shift_diagonal(Complex value) {
    for (int j = 0; j < n_; ++j)
        ab_[static_cast<std::size_t>(j) * ldab() + (kl_ + ku_)] += value;
}

double ComplexBandedMatrix::one_norm() const {
    double best = 0.0;
    for (int j = 0; j < n_; ++j) {
        double col = 0.0;
        const int i0 = std::max(0, j - ku_), i1 = std::min(n_ - 1, j + kl_);
        for (int i = i0; i <= i1; ++i) col += std::abs((*this)(i, j));
        best = std::max(best, col);
    }
    return best;
}

ComplexDenseMatrix::ComplexDenseMatrix(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("ComplexDenseMatrix: n must be >= 1");
    a_.assign(static_cast<std::size_t>(n) * n, Complex{0.0, 0.0});
}

ComplexDenseMatrix::ComplexDenseMatrix(int n, std::vector<Complex> entries)
    : n_(n), a_(std::move(entries)) {
    if (n < 1 || a_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("ComplexDenseMatrix: size mismatch");
    check_finite();
}

void ComplexDenseMatrix::check_finite() const {
    for (const auto& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("ComplexDenseMatrix: non-finite entry");
}

}  // namespace stark
