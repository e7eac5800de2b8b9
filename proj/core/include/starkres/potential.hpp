#pragma once

#include <complex>

namespace stark {

// Model potentials with evaluation on the real line and along complex
// deformation paths. The soft-core Coulomb family is the computable stand-in
// for genuinely singular attractive centers; its complex evaluation uses the
// principal square-root branch and is valid only where Re(reg^2+(z-c)^2) > 0.
class PotentialSpec {
public:
    enum class Kind { zero, gaussian_well, soft_coulomb, square_well };

    static PotentialSpec zero();
    static PotentialSpec gaussian_well(double depth, double width, double center = 0.0);
    static PotentialSpec soft_coulomb(double charge, double reg, double center = 0.0);
    static PotentialSpec square_well(double depth, double half_width);

    Kind kind() const { return kind_; }

    double eval_real(double x) const;
    std::complex<double> eval_complex(std::complex<double> z) const;

private:
    PotentialSpec(Kind kind, double p0, double p1, double p2)
        : kind_(kind), p0_(p0), p1_(p1), p2_(p2) {}

    Kind kind_;
    double p0_, p1_, p2_;
};

}  // namespace stark
