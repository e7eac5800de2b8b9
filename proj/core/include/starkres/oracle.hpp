#pragma once

#include <complex>
#include <vector>

namespace stark {

enum class OracleFormula { free_stark_cap, harmonic_cap };

// Closed-form reference spectrum. `eigenvalues[q]` is the level value and
// `multiplicities[q]` the number of multi-indices realizing it; the list is
// sorted by |lambda| ascending, ties broken by Im then Re.
struct OracleSpectrum {
    std::vector<std::complex<double>> eigenvalues;
    std::vector<int> multiplicities;
    OracleFormula formula_id;
};

// Levels sqrt(eps)*e^{-i pi/4}*(2q + dim) - i/(4 eps), q = 0..count-1.
OracleSpectrum free_stark_cap_spectrum(double eps, int dim, int count);

// Levels sqrt(eps)*e^{-i pi/4}*(2q + dim), q = 0..count-1.
OracleSpectrum harmonic_cap_spectrum(double eps, int dim, int count);

}  // namespace stark
