#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

#include "starkres/eig.hpp"

namespace stark {

namespace {

double norm2(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& c : v) s += std::norm(c);
    return std::sqrt(s);
}

// Eigen-decomposition of a small dense Hessenberg block (values + right
// eigenvectors), used on the projected matrix H_m.
void small_eig(std::vector<Complex> h, int m, std::vector<Complex>& w,
               std::vector<Complex>& vr) {
    w.resize(m);
    vr.assign(static_cast<std::size_t>(m) * m, Complex(0.0));
    const int info = LAPACKE_zgeev(
        LAPACK_COL_MAJOR, 'N', 'V', m,
        reinterpret_cast<lapack_complex_double*>(h.data()), m,
        reinterpret_cast<lapack_complex_double*>(w.data()), nullptr, 1,
        reinterpret_cast<lapack_complex_double*>(vr.data()), m);
    if (info != 0) throw std::runtime_error("shift_invert_arnoldi: projected QR failed");
}

}  // namespace

SpectrumResult shift_invert_arnoldi(const ComplexBandedMatrix& A, Complex sigma, int k,
                                    double tol, int max_restarts) {
    const int n = A.n();
    if (k < 1) throw std::invalid_argument("shift_invert_arnoldi: k must be >= 1");
    k = std::min(k, n);

    auto factor = [&](Complex s) {
        ComplexBandedMatrix B(A);
        B.shift_diagonal(-s);
        return BandedLU(B);
    };
    BandedLU lu = factor(sigma);
    if (lu.singular()) {  // shift sits on an eigenvalue; nudge once
        sigma += Complex(1e-8 * (1.0 + std::abs(sigma)), 0.0);
        lu = factor(sigma);
        if (lu.singular())
            throw std::runtime_error("shift_invert_arnoldi: shifted matrix singular");
    }

    const int mdim = std::min(n, std::max(2 * k + 10, 30));
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Complex> start(n);
    for (Complex& c : start) c = Complex(dist(rng), dist(rng));

    std::vector<std::vector<Complex>> V;  // orthonormal Krylov basis
    std::vector<Complex> H;               // (mdim+1) x mdim, column major

    SpectrumResult result;
    result.method = EigMethod::shift_invert_arnoldi;

    for (int restart = 0; restart <= max_restarts; ++restart) {
        V.assign(1, start);
        {
            const double s = norm2(V[0]);
            for (Complex& c : V[0]) c /= s;
        }
        H.assign(static_cast<std::size_t>(mdim + 1) * mdim, Complex(0.0));
        int m_eff = mdim;
        for (int j = 0; j < mdim; ++j) {
            std::vector<Complex> w = lu.solve(V[j]);
            // Modified Gram-Schmidt with one reorthogonalization pass.
            for (int pass = 0; pass < 2; ++pass) {
                for (int i = 0; i <= j; ++i) {
                    Complex hij(0.0);
                    for (int t = 0; t < n; ++t) hij += std::conj(V[i][t]) * w[t];
                    H[static_cast<std::size_t>(j) * (mdim + 1) + i] += hij;
                    for (int t = 0; t < n; ++t) w[t] -= hij * V[i][t];
                }
            }
            const double hnext = norm2(w);
            H[static_cast<std::size_t>(j) * (mdim + 1) + j + 1] = hnext;
            if (hnext < 1e-13) {  // invariant subspace found
                m_eff = j + 1;
                break;
            }
            for (Complex& c : w) c /= hnext;
            V.push_back(std::move(w));
        }

        // Ritz pairs of the m_eff x m_eff projected block.
        std::vector<Complex> Hm(static_cast<std::size_t>(m_eff) * m_eff);
        for (int j = 0; j < m_eff; ++j)
            for (int i = 0; i < m_eff; ++i)
                Hm[static_cast<std::size_t>(j) * m_eff + i] =
                    H[static_cast<std::size_t>(j) * (mdim + 1) + i];
        std::vector<Complex> mu, y;
        small_eig(Hm, m_eff, mu, y);

        // Largest |mu| of the inverted operator = nearest to sigma for A.
        std::vector<int> order(m_eff);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return std::abs(mu[a]) > std::abs(mu[b]); });
        const int kept = std::min(k, m_eff);

        result.eigenvalues.assign(kept, Complex(0.0));
        result.residuals.assign(kept, 0.0);
        std::vector<std::vector<Complex>> ritz_vecs(kept, std::vector<Complex>(n, 0.0));
        bool all_ok = true;
        for (int s = 0; s < kept; ++s) {
            const int idx = order[s];
            std::vector<Complex>& v = ritz_vecs[s];
            for (int i = 0; i < m_eff; ++i) {
                const Complex yi = y[static_cast<std::size_t>(idx) * m_eff + i];
                for (int t = 0; t < n; ++t) v[t] += yi * V[i][t];
            }
            const Complex lambda = sigma + 1.0 / mu[idx];
            std::vector<Complex> av = A.matvec(v);
            double num = 0.0, den = 0.0;
            for (int t = 0; t < n; ++t) {
                num += std::norm(av[t] - lambda * v[t]);
                den += std::norm(v[t]);
            }
            result.eigenvalues[s] = lambda;
            result.residuals[s] = std::sqrt(num / den);
            if (result.residuals[s] > tol) all_ok = false;
        }

        if (all_ok || restart == max_restarts || m_eff < mdim) {
            result.converged = all_ok || m_eff < mdim;
            // Deterministic ordering: |lambda - sigma|, ties by Im then Re.
            std::vector<int> fin(kept);
            std::iota(fin.begin(), fin.end(), 0);
            std::stable_sort(fin.begin(), fin.end(), [&](int a, int b) {
                const double da = std::abs(result.eigenvalues[a] - sigma);
                const double db = std::abs(result.eigenvalues[b] - sigma);
                if (da != db) return da < db;
                if (result.eigenvalues[a].imag() != result.eigenvalues[b].imag())
                    return result.eigenvalues[a].imag() < result.eigenvalues[b].imag();
                return result.eigenvalues[a].real() < result.eigenvalues[b].real();
            });
            SpectrumResult sorted;
            sorted.method = result.method;
            sorted.converged = result.converged;
            for (int idx : fin) {
                sorted.eigenvalues.push_back(result.eigenvalues[idx]);
                sorted.residuals.push_back(result.residuals[idx]);
            }
            return sorted;
        }

        // Restart from the span of the wanted Ritz vectors, weighted toward
        // the unconverged directions.
        std::fill(start.begin(), start.end(), Complex(0.0));
        for (int s = 0; s < kept; ++s) {
            const double wgt = 1.0 + result.residuals[s] / tol;
            for (int t = 0; t < n; ++t) start[t] += wgt * ritz_vecs[s][t];
        }
        if (norm2(start) < 1e-14)
            for (Complex& c : start) c = Complex(dist(rng), dist(rng));
    }
    return result;  // unreachable
}

}  // namespace stark
