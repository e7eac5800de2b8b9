#include "starkres/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stark {

namespace {

using cplx = std::complex<double>;

// Number of multi-indices alpha in Z_{>=0}^dim with |alpha| = q:
// C(q + dim - 1, dim - 1).
int level_multiplicity(int q, int dim) {
    long long c = 1;
    for (int i = 1; i <= dim - 1; ++i) c = c * (q + i) / i;
    return static_cast<int>(c);
}

OracleSpectrum build(double eps, int dim, int count, cplx shift, OracleFormula id) {
    if (eps <= 0.0) throw std::invalid_argument("oracle spectrum: eps must be > 0");
    if (dim < 1) throw std::invalid_argument("oracle spectrum: dim must be >= 1");
    if (count < 0) throw std::invalid_argument("oracle spectrum: count must be >= 0");
    const cplx ray = std::sqrt(eps) * std::polar(1.0, -M_PI / 4.0);
    OracleSpectrum spec;
    spec.formula_id = id;
    for (int q = 0; q < count; ++q) {
        spec.eigenvalues.push_back(ray * static_cast<double>(2 * q + dim) + shift);
        spec.multiplicities.push_back(level_multiplicity(q, dim));
    }
    // Canonical ordering: |lambda| ascending, ties by Im then Re.
    std::vector<int> order(spec.eigenvalues.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const double ma = std::abs(spec.eigenvalues[a]), mb = std::abs(spec.eigenvalues[b]);
        if (ma != mb) return ma < mb;
        if (spec.eigenvalues[a].imag() != spec.eigenvalues[b].imag())
            return spec.eigenvalues[a].imag() < spec.eigenvalues[b].imag();
        return spec.eigenvalues[a].real() < spec.eigenvalues[b].real();
    });
    OracleSpectrum sorted;
    sorted.formula_id = id;
    for (int idx : order) {
        sorted.eigenvalues.push_back(spec.eigenvalues[idx]);
        sorted.multiplicities.push_back(spec.multiplicities[idx]);
    }
    return sorted;
}

}  // namespace

OracleSpectrum free_stark_cap_spectrum(double eps, int dim, int count) {
    return build(eps, dim, count, cplx(0.0, -1.0 / (4.0 * eps)),
                 OracleFormula::free_stark_cap);
}

OracleSpectrum harmonic_cap_spectrum(double eps, int dim, int count) {
    return build(eps, dim, count, cplx(0.0, 0.0), OracleFormula::harmonic_cap);
}

}  // namespace stark
