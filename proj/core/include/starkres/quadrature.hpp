#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace stark {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(int n);

    template <class F>
    double integrate(F&& f, double a, double b) const {
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            sum += weights[i] * f(mid + half * nodes[i]);
        return half * sum;
    }
};

// Adaptive Simpson quadrature with an absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 48);

// The standard C_c^inf bump c*exp(-1/(1-(t/r)^2)) on |t| < r, normalized so the
// 1d integral (dim=1) or the 2d rotational integral (dim=2) equals one.
class Bump {
public:
    Bump(double radius, int dim);

    double radius() const { return radius_; }
    // Unnormalized profile exp(-1/(1-(t/r)^2)) for |t| < r, else 0.
    static double profile(double t, double r);
    double operator()(double t) const { return norm_ * profile(t, radius_); }
    // First and second derivatives in t (1d sense along the profile).
    double deriv(double t) const;
    double deriv2(double t) const;

private:
    double radius_;
    double norm_;  // 1/(integral of the unnormalized profile)
};

// Halton quasi-random sequence (bases 2 and 3), used for sampled property checks.
class Halton2D {
public:
    std::pair<double, double> next();

private:
    static double radical_inverse(unsigned long long i, unsigned base);
    unsigned long long index_ = 1;
};

}  // namespace stark
