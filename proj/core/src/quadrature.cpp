#include "starkres/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace stark {

GaussLegendre::GaussLegendre(int n) {
    if (n < 1) throw std::invalid_argument("GaussLegendre: n must be >= 1");
    nodes.resize(n);
    weights.resize(n);
    // Newton iteration on Legendre polynomials, symmetric nodes.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa,
                     double b, double fb, double m, double fm, double whole,
                     double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = simpson(a, fa, b, fb, fm);
    return adaptive_step(f, a, fa, b, fb, m, fm, whole, abs_tol, max_depth);
}

double Bump::profile(double t, double r) {
    const double u = t / r;
    const double d = 1.0 - u * u;
    if (d <= 0.0) return 0.0;
    return std::exp(-1.0 / d);
}

Bump::Bump(double radius, int dim) : radius_(radius) {
    if (radius <= 0.0) throw std::invalid_argument("Bump: radius must be positive");
    if (dim != 1 && dim != 2) throw std::invalid_argument("Bump: dim must be 1 or 2");
    double mass;
    if (dim == 1) {
        mass = adaptive_simpson([radius](double t) { return profile(t, radius); },
                                -radius, radius, 1e-13);
    } else {
        mass = 2.0 * M_PI *
               adaptive_simpson([radius](double t) { return profile(t, radius) * t; },
                                0.0, radius, 1e-13);
    }
    norm_ = 1.0 / mass;
}

double Bump::deriv(double t) const {
    const double u = t / radius_;
    const double d = 1.0 - u * u;
    if (d <= 0.0) return 0.0;
    return (*this)(t) * (-2.0 * u / radius_) / (d * d);
}

double Bump::deriv2(double t) const {
    const double u = t / radius_;
    const double d = 1.0 - u * u;
    if (d <= 0.0) return 0.0;
    const double r = radius_;
    const double d1 = (-2.0 * u / r) / (d * d);
    const double d2 = (-2.0 / (r * r)) * (1.0 + 3.0 * u * u) / (d * d * d);
    return (*this)(t) * (d1 * d1 + d2);
}

double Halton2D::radical_inverse(unsigned long long i, unsigned base) {
    double f = 1.0, result = 0.0;
    while (i > 0) {
        f /= base;
        result += f * (i % base);
        i /= base;
    }
    return result;
}

std::pair<double, double> Halton2D::next() {
    const auto i = index_++;
    return {radical_inverse(i, 2), radical_inverse(i, 3)};
}

}  // namespace stark
