#pragma once

#include <complex>

#include "starkres/banded.hpp"
#include "starkres/distortion.hpp"
#include "starkres/grid.hpp"
#include "starkres/potential.hpp"

namespace stark {

// Discretization of -Laplacian + x + V(x) - i*eps*x^2 on the interior nodes of
// `grid` with Dirichlet boundary conditions. `fd_order` selects the 3-point or
// 5-point central stencil. `include_stark` drops the linear x term, giving the
// plain damped operator -Laplacian + V - i*eps*x^2.
ComplexBandedMatrix assemble_cap_hamiltonian(const Grid1D& grid, const PotentialSpec& V,
                                             double eps, int fd_order = 2,
                                             bool include_stark = true);

// Distorted operator -D g D + r_theta + x + theta*v(x) + V(x + theta*v(x))
// with g = (1 + theta*v')^{-2}. The divergence-form term uses midpoint values
// of g so that the discrete matrix stays complex-symmetric.
ComplexBandedMatrix assemble_distorted_hamiltonian(const Grid1D& grid,
                                                   const PotentialSpec& V,
                                                   std::complex<double> theta,
                                                   const DistortionField& field);

// Distorted operator with the additional absorbing term -i*eps*(x+theta*v)^2.
ComplexBandedMatrix assemble_cap_distorted(const Grid1D& grid, const PotentialSpec& V,
                                           std::complex<double> theta,
                                           const DistortionField& field, double eps);

// The pure second-order block -D g D alone (same discretization as above);
// used for quadratic-form sign checks.
ComplexBandedMatrix assemble_kinetic_distorted(const Grid1D& grid,
                                               std::complex<double> theta,
                                               const DistortionField& field);

}  // namespace stark
