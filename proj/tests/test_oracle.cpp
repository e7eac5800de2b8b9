#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "starkres/oracle.hpp"

using namespace stark;

using Complex = std::complex<double>;

namespace {
const Complex kPhase = std::exp(Complex(0.0, -std::numbers::pi / 4.0));
}

TEST_CASE("free-Stark damped spectrum: first string in one dimension") {
    const auto sp = free_stark_cap_spectrum(0.25, 1, 4);
    REQUIRE(sp.eigenvalues.size() == 4);
    // sqrt(0.25) e^{-i pi/4} (2q+1) - i: smallest is 0.5/sqrt(2) (1 - i) - i.
    CHECK(std::abs(sp.eigenvalues[0] - Complex(0.3535533905932738, -1.3535533905932738)) < 1e-14);
    for (std::size_t q = 0; q < sp.eigenvalues.size(); ++q) {
        const Complex expect = 0.5 * kPhase * (2.0 * q + 1.0) - Complex(0.0, 1.0);
        CHECK(std::abs(sp.eigenvalues[q] - expect) < 1e-13);
        CHECK(sp.multiplicities[q] == 1);
    }
}

TEST_CASE("harmonic family sits on the -pi/4 ray with constant spacing") {
    const double eps = 0.7;
    const auto sp = harmonic_cap_spectrum(eps, 1, 8);
    const Complex step = 2.0 * std::sqrt(eps) * kPhase;
    for (std::size_t q = 0; q < sp.eigenvalues.size(); ++q) {
        CHECK(std::abs(std::arg(sp.eigenvalues[q]) + std::numbers::pi / 4.0) < 1e-13);
        if (q > 0)
            CHECK(std::abs(sp.eigenvalues[q] - sp.eigenvalues[q - 1] - step) < 1e-13);
    }
}

TEST_CASE("scaling law: quadrupling the strength doubles the spectrum") {
    const auto a = harmonic_cap_spectrum(0.3, 1, 6);
    const auto b = harmonic_cap_spectrum(1.2, 1, 6);
    for (std::size_t q = 0; q < a.eigenvalues.size(); ++q)
        CHECK(std::abs(b.eigenvalues[q] - 2.0 * a.eigenvalues[q]) < 1e-13);
}

TEST_CASE("free-Stark values are the harmonic values shifted by -i/(4 eps)") {
    const double eps = 0.45;
    const auto h = harmonic_cap_spectrum(eps, 2, 10);
    const auto f = free_stark_cap_spectrum(eps, 2, 10);
    const Complex shift(0.0, -1.0 / (4.0 * eps));
    REQUIRE(h.eigenvalues.size() == f.eigenvalues.size());
    for (std::size_t q = 0; q < h.eigenvalues.size(); ++q) {
        CHECK(std::abs(f.eigenvalues[q] - (h.eigenvalues[q] + shift)) < 1e-13);
        CHECK(f.multiplicities[q] == h.multiplicities[q]);
    }
}

TEST_CASE("level degeneracies follow the simplicial counts") {
    // dim 2: level n has multiplicity n+1; dim 3: (n+1)(n+2)/2.
    const auto d2 = harmonic_cap_spectrum(1.0, 2, 5);
    for (std::size_t q = 0; q < d2.eigenvalues.size(); ++q)
        CHECK(d2.multiplicities[q] == static_cast<int>(q) + 1);
    const auto d3 = harmonic_cap_spectrum(1.0, 3, 5);
    for (std::size_t q = 0; q < d3.eigenvalues.size(); ++q)
        CHECK(d3.multiplicities[q] == static_cast<int>((q + 1) * (q + 2) / 2));
}

TEST_CASE("spectra come sorted by modulus") {
    for (const auto& sp : {harmonic_cap_spectrum(0.25, 1, 12),
                           free_stark_cap_spectrum(0.25, 1, 12)}) {
        for (std::size_t q = 1; q < sp.eigenvalues.size(); ++q)
            CHECK(std::abs(sp.eigenvalues[q - 1]) <= std::abs(sp.eigenvalues[q]) + 1e-15);
    }
}
