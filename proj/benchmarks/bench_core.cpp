#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "starkres/assemble.hpp"
#include "starkres/cap.hpp"
#include "starkres/eig.hpp"

using namespace stark;

namespace {

ComplexBandedMatrix damped_operator(int m, int order) {
    const Grid1D grid(-40.0, 15.0, m);
    return assemble_cap_hamiltonian(grid, PotentialSpec::gaussian_well(2.0, 1.0), 0.25,
                                    order, true);
}

void BM_AssembleCap(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(damped_operator(m, 2));
    state.SetComplexityN(m);
}
BENCHMARK(BM_AssembleCap)->Arg(1000)->Arg(4000)->Arg(16000)->Complexity();

void BM_AssembleDistorted(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const Grid1D grid(-60.0, 15.0, m);
    const DistortionField field = build_field_1d(ConeParams{});
    for (auto _ : state)
        benchmark::DoNotOptimize(assemble_distorted_hamiltonian(
            grid, PotentialSpec::gaussian_well(2.0, 1.0), std::complex<double>(0.0, -0.3),
            field));
    state.SetComplexityN(m);
}
BENCHMARK(BM_AssembleDistorted)->Arg(1000)->Arg(4000)->Complexity();

void BM_BandedLUFactorSolve(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const ComplexBandedMatrix A = damped_operator(m, 4);
    std::vector<Complex> b(m, Complex(1.0, -1.0));
    for (auto _ : state) {
        BandedLU lu(A);
        benchmark::DoNotOptimize(lu.solve(b));
    }
    state.SetComplexityN(m);
}
BENCHMARK(BM_BandedLUFactorSolve)->Arg(1000)->Arg(8000)->Arg(32000)->Complexity();

void BM_ShiftInvertArnoldi(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const ComplexBandedMatrix A = damped_operator(m, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            shift_invert_arnoldi(A, Complex(-1.3, -0.35), 8, 1e-8));
    state.SetComplexityN(m);
}
BENCHMARK(BM_ShiftInvertArnoldi)->Arg(1000)->Arg(4000)->Arg(16000)->Complexity();

void BM_DenseQR(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const ComplexBandedMatrix A = damped_operator(m, 2);
    const ComplexDenseMatrix D(A.n(), A.to_dense());
    for (auto _ : state) benchmark::DoNotOptimize(dense_eigenvalues(D));
    state.SetComplexityN(m);
}
BENCHMARK(BM_DenseQR)->Arg(200)->Arg(400)->Arg(800)->Complexity();

void BM_SmallestSingularValue(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const ComplexBandedMatrix A = damped_operator(m, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(smallest_singular_value(A, Complex(0.0, 0.3)));
    state.SetComplexityN(m);
}
BENCHMARK(BM_SmallestSingularValue)->Arg(1000)->Arg(8000)->Complexity();

void BM_Field2DEval(benchmark::State& state) {
    const DistortionField field = build_field_2d(ConeParams{});
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-50.0, 50.0);
    for (auto _ : state) {
        const Vec2 x{dist(rng), dist(rng)};
        benchmark::DoNotOptimize(field.v(x));
    }
}
BENCHMARK(BM_Field2DEval);

}  // namespace

BENCHMARK_MAIN();
