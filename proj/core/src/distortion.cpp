#include "starkres/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "starkres/quadrature.hpp"

namespace stark {

void ConeParams::validate() const {
    if (K <= 0.0) throw std::invalid_argument("ConeParams: K must be positive");
    if (mollifier_radius <= 0.0 || mollifier_radius > 1.0)
        throw std::invalid_argument("ConeParams: mollifier_radius must be in (0, 1]");
}

bool cone_contains(double x1, const ConeParams& params) { return x1 >= -params.rho; }

bool cone_contains(const Vec2& x, const ConeParams& params) {
    return std::abs(x[1]) <= params.K * (x[0] + params.rho);
}

namespace {
inline double dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }
inline double norm(const Vec2& a) { return std::hypot(a[0], a[1]); }
}  // namespace

// ---------------------------------------------------------------------------
// 1d field. The cone degenerates to {x >= -rho}; the mollified distance gives
//   v(x) = s * int_{t >= x+rho} phi(t) dt,    s = sqrt(1 + K^-2),
// so v ramps from s (far left) to 0 (right of -rho + r) and all derivatives
// collapse onto derivatives of the bump itself.
// ---------------------------------------------------------------------------

class Field1DImpl {
public:
    explicit Field1DImpl(const ConeParams& p)
        : p_(p), s_(std::sqrt(1.0 + 1.0 / (p.K * p.K))), bump_(p.mollifier_radius, 1) {}

    double v(double x) const {
        const double a = x + p_.rho, r = bump_.radius();
        if (a <= -r) return s_;
        if (a >= r) return 0.0;
        return s_ * adaptive_simpson([this](double t) { return bump_(t); }, a, r, 1e-12);
    }

    double dv(double x) const { return -s_ * bump_(x + p_.rho); }
    double d2v(double x) const { return -s_ * bump_.deriv(x + p_.rho); }
    double d3v(double x) const { return -s_ * bump_.deriv2(x + p_.rho); }

    double F(double x) const {
        const double a = x + p_.rho, r = bump_.radius();
        if (a >= r) return 0.0;
        if (a <= -r) return s_ * a;  // symmetric bump: int t*phi = 0
        return -s_ * adaptive_simpson([this, a](double t) { return (t - a) * bump_(t); },
                                      a, r, 1e-12);
    }

private:
    ConeParams p_;
    double s_;
    Bump bump_;
};

// ---------------------------------------------------------------------------
// 2d field. The smoothed convex set equals the cone for x1 > -rho+1 and is
// capped by the circular fillet tangent to both boundary rays. Distances are
// exact projections; the convolution with the radial bump is evaluated either
// through the half-plane mass profile (when the whole bump sees one flat piece
// of the boundary) or by polar quadrature with radial splitting at the set
// boundary, which convexity makes an interval per direction.
// ---------------------------------------------------------------------------

class Field2DImpl {
public:
    explicit Field2DImpl(const ConeParams& p)
        : p_(p),
          s_(std::sqrt(1.0 + 1.0 / (p.K * p.K))),
          bump_(p.mollifier_radius, 2),
          gl8_(8),
          gl12_(12),
          gl32_(32) {
        const double K = p.K;
        root_ = std::sqrt(1.0 + K * K);
        u_ray_ = {1.0 / root_, K / root_};
        n_up_ = {-K / root_, 1.0 / root_};
        apex_ = {-p.rho, 0.0};
        t_tan_ = root_;  // ray parameter with x1 = -rho + 1
        center_ = {-p.rho + 1.0 + K * K, 0.0};
        fillet_radius_ = K * root_;
        cap_x1_ = -p.rho + 1.0;
        build_profile_tables();
    }

    const ConeParams& params() const { return p_; }

    bool inside(const Vec2& q) const {  // q has q[1] >= 0
        if (q[0] >= cap_x1_) return q[1] <= p_.K * (q[0] + p_.rho);
        return std::hypot(q[0] - center_[0], q[1]) <= fillet_radius_;
    }

    // Distance from an exterior point to the set; 0 inside.
    double distance(const Vec2& x) const {
        const Vec2 q{x[0], std::abs(x[1])};
        if (inside(q)) return 0.0;
        double best = std::numeric_limits<double>::infinity();
        const Vec2 rel{q[0] - apex_[0], q[1] - apex_[1]};
        const double t = std::max(dot(rel, u_ray_), t_tan_);
        const Vec2 pr{apex_[0] + t * u_ray_[0], apex_[1] + t * u_ray_[1]};
        best = std::min(best, std::hypot(q[0] - pr[0], q[1] - pr[1]));
        const Vec2 w{q[0] - center_[0], q[1] - center_[1]};
        const double lw = norm(w);
        if (lw > 0.0) {
            const double px = center_[0] + fillet_radius_ * w[0] / lw;
            if (px <= cap_x1_ + 1e-12 && lw > fillet_radius_)
                best = std::min(best, lw - fillet_radius_);
        }
        return best;
    }

    // Distance from an interior point to the boundary (0 outside).
    double boundary_distance(const Vec2& x) const {
        const Vec2 q{x[0], std::abs(x[1])};
        if (!inside(q)) return 0.0;
        double best = std::numeric_limits<double>::infinity();
        const Vec2 rel{q[0] - apex_[0], q[1] - apex_[1]};
        if (dot(rel, u_ray_) >= t_tan_)
            best = std::min(best, (p_.K * (q[0] + p_.rho) - q[1]) / root_);
        const double lw = std::hypot(q[0] - center_[0], q[1] - center_[1]);
        if (lw <= fillet_radius_) best = std::min(best, fillet_radius_ - lw);
        return best;
    }

    // Outward unit gradient of the distance at an exterior point (0 inside).
    Vec2 dist_gradient(const Vec2& x) const {
        Vec2 q{x[0], std::abs(x[1])};
        if (inside(q)) return {0.0, 0.0};
        const double d = distance(q);
        const Vec2 proj = project(q, d);
        Vec2 n{(q[0] - proj[0]) / d, (q[1] - proj[1]) / d};
        if (x[1] < 0.0) n[1] = -n[1];
        return n;
    }

    Vec2 v(const Vec2& x) const {
        const Vec2 q{x[0], std::abs(x[1])};
        const double r = bump_.radius();
        if (inside(q) && boundary_distance(q) >= r) return {0.0, 0.0};
        Vec2 result;
        double d_line;
        if (flat_zone(q, d_line)) {
            const double mass = profile_G(d_line);
            result = {-s_ * n_up_[0] * mass, -s_ * n_up_[1] * mass};
        } else {
            const Vec2 integral = polar_integral_v(q);
            result = {-s_ * integral[0], -s_ * integral[1]};
        }
        if (x[1] < 0.0) result[1] = -result[1];
        return result;
    }

    Mat2 dv(const Vec2& x) const {
        const Vec2 q{x[0], std::abs(x[1])};
        const double r = bump_.radius();
        if (inside(q) && boundary_distance(q) >= r) return {{{0.0, 0.0}, {0.0, 0.0}}};
        Mat2 result;
        double d_line;
        if (flat_zone(q, d_line)) {
            const double g = profile_chord(d_line);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) result[i][j] = -s_ * n_up_[i] * n_up_[j] * g;
        } else {
            result = polar_integral_dv(q);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) result[i][j] *= -s_;
        }
        if (x[1] < 0.0) {  // reflection y -> -y conjugates the Jacobian
            result[0][1] = -result[0][1];
            result[1][0] = -result[1][0];
        }
        return result;
    }

    double F(const Vec2& x) const {
        const Vec2 q{x[0], std::abs(x[1])};
        const double r = bump_.radius();
        if (inside(q) && boundary_distance(q) >= r) return 0.0;
        double d_line;
        if (flat_zone(q, d_line)) return -s_ * profile_H(d_line);
        double acc = 0.0;
        const int n_ang = kAngularNodes;
        for (int j = 0; j < n_ang; ++j) {
            const double psi = 2.0 * M_PI * (j + 0.5) / n_ang;
            const Vec2 omega{std::cos(psi), std::sin(psi)};
            acc += radial_pieces(q, omega, [&](double t, const Vec2& z) {
                return distance(z) * bump_(t) * t;
            });
        }
        return -s_ * acc * (2.0 * M_PI / n_ang);
    }

private:
    static constexpr int kAngularNodes = 128;

    Vec2 project(const Vec2& q, double d) const {
        // Recompute the nearest boundary point (q assumed exterior, d > 0).
        const Vec2 rel{q[0] - apex_[0], q[1] - apex_[1]};
        const double t = std::max(dot(rel, u_ray_), t_tan_);
        const Vec2 pr{apex_[0] + t * u_ray_[0], apex_[1] + t * u_ray_[1]};
        if (std::abs(std::hypot(q[0] - pr[0], q[1] - pr[1]) - d) < 1e-12 * (1.0 + d))
            return pr;
        const Vec2 w{q[0] - center_[0], q[1] - center_[1]};
        const double lw = norm(w);
        return {center_[0] + fillet_radius_ * w[0] / lw,
                center_[1] + fillet_radius_ * w[1] / lw};
    }

    // True when the whole bump around q interacts with a single flat boundary
    // piece (the upper ray), so the convolution reduces to the 1d mass profile.
    bool flat_zone(const Vec2& q, double& d_line) const {
        const double r = bump_.radius();
        d_line = (q[1] - p_.K * (q[0] + p_.rho)) / root_;
        const Vec2 rel{q[0] - apex_[0], q[1] - apex_[1]};
        const double t_foot = dot(rel, u_ray_);
        if (t_foot < t_tan_ + 2.0 * r) return false;
        const double d_other = (q[1] + p_.K * (q[0] + p_.rho)) / root_;
        return std::abs(d_other) >= 2.0 * r;
    }

    template <class Integrand>
    double accumulate_gl(const Integrand& f, double a, double b, const Vec2& q,
                         const Vec2& omega) const {
        // The bump profile needs more than one Gauss panel per radius for
        // ~1e-7 accuracy; split into panels no longer than half the radius.
        const int n_panels =
            std::max(1, static_cast<int>(std::ceil((b - a) / (0.5 * bump_.radius()))));
        double acc = 0.0;
        for (int panel = 0; panel < n_panels; ++panel) {
            const double pa = a + (b - a) * panel / n_panels;
            const double pb = a + (b - a) * (panel + 1) / n_panels;
            const double mid = 0.5 * (pa + pb), half = 0.5 * (pb - pa);
            for (std::size_t i = 0; i < gl12_.nodes.size(); ++i) {
                const double t = mid + half * gl12_.nodes[i];
                const Vec2 z{q[0] - t * omega[0], q[1] - t * omega[1]};
                acc += half * gl12_.weights[i] * f(t, z);
            }
        }
        return acc;
    }

    // Integrates f over the portions of the ray segment {q - t*omega, t in
    // [0, r]} lying outside the set. Convexity makes the inside part of the
    // segment a single interval, located by bisection.
    template <class Integrand>
    double radial_pieces(const Vec2& q, const Vec2& omega, const Integrand& f) const {
        const double r = bump_.radius();
        auto is_in = [&](double t) {
            Vec2 z{q[0] - t * omega[0], q[1] - t * omega[1]};
            z[1] = std::abs(z[1]);
            return inside(z);
        };
        // Coarse scan for state changes, then bisection.
        constexpr int kScan = 8;
        double knots[kScan + 3];
        int n_knots = 0;
        knots[n_knots++] = 0.0;
        bool prev = is_in(0.0);
        for (int i = 1; i <= kScan; ++i) {
            const double t = r * i / kScan;
            const bool cur = is_in(t);
            if (cur != prev) {
                double lo = r * (i - 1) / static_cast<double>(kScan), hi = t;
                for (int it = 0; it < 50; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    (is_in(mid) == prev ? lo : hi) = mid;
                }
                knots[n_knots++] = 0.5 * (lo + hi);
                prev = cur;
            }
        }
        knots[n_knots++] = r;
        double acc = 0.0;
        bool seg_inside = is_in(0.5 * knots[1]);  // state of first segment
        for (int sgm = 0; sgm + 1 < n_knots; ++sgm) {
            if (!seg_inside) acc += accumulate_gl(f, knots[sgm], knots[sgm + 1], q, omega);
            seg_inside = !seg_inside;
        }
        return acc;
    }

    Vec2 polar_integral_v(const Vec2& q) const {
        Vec2 acc{0.0, 0.0};
        for (int j = 0; j < kAngularNodes; ++j) {
            const double psi = 2.0 * M_PI * (j + 0.5) / kAngularNodes;
            const Vec2 omega{std::cos(psi), std::sin(psi)};
            acc[0] += radial_pieces(q, omega, [&](double t, const Vec2& z) {
                return dist_gradient(z)[0] * bump_(t) * t;
            });
            acc[1] += radial_pieces(q, omega, [&](double t, const Vec2& z) {
                return dist_gradient(z)[1] * bump_(t) * t;
            });
        }
        const double w = 2.0 * M_PI / kAngularNodes;
        return {acc[0] * w, acc[1] * w};
    }

    Mat2 polar_integral_dv(const Vec2& q) const {
        // dv_ij = int grad_i dist(q - y) d_j phi(y) dy, with d_j phi radial.
        Mat2 acc{{{0.0, 0.0}, {0.0, 0.0}}};
        for (int j = 0; j < kAngularNodes; ++j) {
            const double psi = 2.0 * M_PI * (j + 0.5) / kAngularNodes;
            const Vec2 omega{std::cos(psi), std::sin(psi)};
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    acc[a][b] += radial_pieces(q, omega, [&](double t, const Vec2& z) {
                        return dist_gradient(z)[a] * bump_.deriv(t) * omega[b] * t;
                    });
        }
        const double w = 2.0 * M_PI / kAngularNodes;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) acc[a][b] *= w;
        return acc;
    }

    // --- half-plane mass profile -------------------------------------------
    // chord(t) = integral of the 2d bump over the line {n.y = t};
    // G(d) = bump mass of {n.y < d}; H(d) = int_{-r}^d G.
    void build_profile_tables() {
        const double r = bump_.radius();
        const int n = kProfileCells;
        tgrid_.resize(n + 1);
        cumG_.resize(n + 1);
        cumH_.resize(n + 1);
        for (int i = 0; i <= n; ++i) tgrid_[i] = -r + 2.0 * r * i / n;
        cumG_[0] = 0.0;
        for (int i = 0; i < n; ++i)
            cumG_[i + 1] = cumG_[i] + gl8_.integrate([this](double t) { return chord(t); },
                                                     tgrid_[i], tgrid_[i + 1]);
        cumH_[0] = 0.0;
        for (int i = 0; i < n; ++i)
            cumH_[i + 1] = cumH_[i] + gl8_.integrate([this](double t) { return profile_G(t); },
                                                     tgrid_[i], tgrid_[i + 1]);
    }

    double chord(double t) const {
        const double r = bump_.radius();
        const double w2 = r * r - t * t;
        if (w2 <= 0.0) return 0.0;
        const double w = std::sqrt(w2);
        return 2.0 * gl32_.integrate(
                         [this, t](double u) { return bump_(std::hypot(t, u)); }, 0.0, w);
    }

    double profile_chord(double d) const { return chord(d); }

    double profile_G(double d) const {
        const double r = bump_.radius();
        if (d <= -r) return 0.0;
        if (d >= r) return 1.0;
        if (cumG_.empty()) {  // during table construction
            return gl32_.integrate([this](double t) { return chord(t); }, -r, d);
        }
        const int n = kProfileCells;
        const int idx = std::clamp(static_cast<int>((d + r) / (2.0 * r) * n), 0, n - 1);
        return cumG_[idx] +
               gl8_.integrate([this](double t) { return chord(t); }, tgrid_[idx], d);
    }

    double profile_H(double d) const {
        const double r = bump_.radius();
        if (d <= -r) return 0.0;
        if (d >= r) return cumH_.back() + (d - r);  // G == 1 beyond the bump
        const int n = kProfileCells;
        const int idx = std::clamp(static_cast<int>((d + r) / (2.0 * r) * n), 0, n - 1);
        return cumH_[idx] +
               gl8_.integrate([this](double t) { return profile_G(t); }, tgrid_[idx], d);
    }

    static constexpr int kProfileCells = 1024;

    ConeParams p_;
    double s_;
    Bump bump_;
    GaussLegendre gl8_, gl12_, gl32_;
    double root_, t_tan_, fillet_radius_, cap_x1_;
    Vec2 u_ray_, n_up_, apex_, center_;
    std::vector<double> tgrid_, cumG_, cumH_;
};

// ---------------------------------------------------------------------------

double DistortionField::v(double x) const { return impl1_->v(x); }
double DistortionField::dv(double x) const { return impl1_->dv(x); }
double DistortionField::d2v(double x) const { return impl1_->d2v(x); }
double DistortionField::d3v(double x) const { return impl1_->d3v(x); }
double DistortionField::F(double x) const { return impl1_->F(x); }

Vec2 DistortionField::v(const Vec2& x) const { return impl2_->v(x); }
Mat2 DistortionField::dv(const Vec2& x) const { return impl2_->dv(x); }
double DistortionField::F(const Vec2& x) const { return impl2_->F(x); }

DistortionField build_field_1d(const ConeParams& params) {
    params.validate();
    DistortionField f;
    f.dimension_ = 1;
    f.params_ = params;
    f.impl1_ = std::make_shared<Field1DImpl>(params);
    return f;
}

DistortionField build_field_2d(const ConeParams& params) {
    params.validate();
    DistortionField f;
    f.dimension_ = 2;
    f.params_ = params;
    f.impl2_ = std::make_shared<Field2DImpl>(params);
    return f;
}

}  // namespace stark
