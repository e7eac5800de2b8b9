#pragma once

#include <array>
#include <memory>

namespace stark {

using Vec2 = std::array<double, 2>;
using Mat2 = std::array<std::array<double, 2>, 2>;

// Parameters of the cone C(K, rho) = { |x'| <= K(x_1 + rho) } and of the
// mollifier used to smooth the distance function.
struct ConeParams {
    double K = 1.0;
    double rho = 2.0;
    double mollifier_radius = 1.0;

    void validate() const;
};

// x in C(K, rho)? In 1d the cone degenerates to { x >= -rho }.
bool cone_contains(double x1, const ConeParams& params);
bool cone_contains(const Vec2& x, const ConeParams& params);

class Field1DImpl;
class Field2DImpl;

// The deformation vector field v = dF where F is the mollified, scaled distance
// to the smoothed convex cone complement. The field vanishes inside the cone
// region, is constant far outside, and carries analytic derivatives.
class DistortionField {
public:
    int dimension() const { return dimension_; }
    const ConeParams& params() const { return params_; }

    // 1d evaluators. d3v is needed for the curvature correction term of the
    // distorted operator, whose closed form involves three derivatives of v.
    double v(double x) const;
    double dv(double x) const;
    double d2v(double x) const;
    double d3v(double x) const;
    // Antiderivative F with v = F'.
    double F(double x) const;

    // 2d evaluators.
    Vec2 v(const Vec2& x) const;
    Mat2 dv(const Vec2& x) const;
    double F(const Vec2& x) const;

    friend DistortionField build_field_1d(const ConeParams& params);
    friend DistortionField build_field_2d(const ConeParams& params);

private:
    DistortionField() = default;
    int dimension_ = 0;
    ConeParams params_;
    std::shared_ptr<const Field1DImpl> impl1_;
    std::shared_ptr<const Field2DImpl> impl2_;
};

DistortionField build_field_1d(const ConeParams& params);
DistortionField build_field_2d(const ConeParams& params);

}  // namespace stark
