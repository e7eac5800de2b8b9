#include "starkres/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace stark {

PotentialSpec PotentialSpec::zero() { return {Kind::zero, 0, 0, 0}; }

PotentialSpec PotentialSpec::gaussian_well(double depth, double width, double center) {
    if (width <= 0.0) throw std::invalid_argument("gaussian_well: width must be positive");
    return {Kind::gaussian_well, depth, width, center};
}

PotentialSpec PotentialSpec::soft_coulomb(double charge, double reg, double center) {
    if (reg <= 0.0) throw std::invalid_argument("soft_coulomb: reg must be positive");
    return {Kind::soft_coulomb, charge, reg, center};
}

PotentialSpec PotentialSpec::square_well(double depth, double half_width) {
    if (half_width <= 0.0)
        throw std::invalid_argument("square_well: half_width must be positive");
    return {Kind::square_well, depth, half_width, 0.0};
}

double PotentialSpec::eval_real(double x) const {
    switch (kind_) {
        case Kind::zero:
            return 0.0;
        case Kind::gaussian_well: {
            const double u = (x - p2_) / p1_;
            return -p0_ * std::exp(-u * u);
        }
        case Kind::soft_coulomb: {
            const double d = x - p2_;
            return p0_ / std::sqrt(p1_ * p1_ + d * d);
        }
        case Kind::square_well:
            return std::abs(x) <= p1_ ? -p0_ : 0.0;
    }
    return 0.0;
}

std::complex<double> PotentialSpec::eval_complex(std::complex<double> z) const {
    switch (kind_) {
        case Kind::zero:
            return {0.0, 0.0};
        case Kind::gaussian_well: {
            const std::complex<double> u = (z - p2_) / p1_;
            return -p0_ * std::exp(-u * u);
        }
        case Kind::soft_coulomb: {
            const std::complex<double> w = p1_ * p1_ + (z - p2_) * (z - p2_);
            if (w.real() <= 0.0)
                throw std::domain_error(
                    "soft_coulomb: complex evaluation outside validity region "
                    "(Re(reg^2+(z-c)^2) <= 0)");
            return p0_ / std::sqrt(w);
        }
        case Kind::square_well:
            // Compactly supported; only the real-axis restriction is meaningful.
            if (z.imag() != 0.0)
                throw std::domain_error("square_well has no analytic continuation");
            return {eval_real(z.real()), 0.0};
    }
    return {0.0, 0.0};
}

}  // namespace stark
