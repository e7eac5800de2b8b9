#include <cmath>
#include <random>

#include "starkres/eig.hpp"

namespace stark {

double smallest_singular_value(const ComplexBandedMatrix& A, Complex z) {
    ComplexBandedMatrix B(A);
    B.shift_diagonal(-z);
    const BandedLU lu(B);
    if (lu.singular()) return 0.0;  // z is numerically an eigenvalue

    const int n = A.n();
    std::mt19937 rng(54321);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Complex> u(n);
    for (Complex& c : u) c = Complex(dist(rng), dist(rng));
    double s = 0.0;
    for (Complex& c : u) s += std::norm(c);
    s = std::sqrt(s);
    for (Complex& c : u) c /= s;

    // Power iteration on (B^H B)^{-1}: dominant eigenvalue is 1/sigma_min^2.
    double prev = -1.0;
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<Complex> w = lu.solve(u, 'C');
        std::vector<Complex> y = lu.solve(w, 'N');
        double nu = 0.0;
        for (const Complex& c : y) nu += std::norm(c);
        nu = std::sqrt(nu);
        const double sigma = 1.0 / std::sqrt(nu);
        if (prev >= 0.0 && std::abs(sigma - prev) <= 1e-6 * sigma) return sigma;
        prev = sigma;
        for (int t = 0; t < n; ++t) u[t] = y[t] / nu;
    }
    return prev;
}

}  // namespace stark
