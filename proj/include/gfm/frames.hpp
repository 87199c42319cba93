#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

namespace gfm {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Vec12 = Eigen::Matrix<double, 12, 1>;

inline constexpr double pi = std::numbers::pi;

/// Planar rotation matrix [[cos a, sin a], [-sin a, cos a]].
/// Maps nominal-frame (DQ) components to controller-frame (dq) components
/// when evaluated at the frame offset angle.
inline Mat2 t2_rotation(double alpha) {
    const double c = std::cos(alpha), s = std::sin(alpha);
    Mat2 m;
    m << c, s, -s, c;
    return m;
}

/// t2_rotation(pi/2) applied to a vector: [v1, -v0].
inline Vec2 t2_quarter(const Vec2& v) { return Vec2(v.y(), -v.x()); }

/// t2_rotation(-pi/2) applied to a vector: [-v1, v0].
inline Vec2 t2_quarter_neg(const Vec2& v) { return Vec2(-v.y(), v.x()); }

/// Amplitude-invariant transform of a balanced three-phase signal to the
/// rotating frame at angle alpha (2/3-scaled cosine/negated-sine rows).
inline Vec2 t1_transform(double alpha, const Vec3& f_abc) {
    constexpr double two_thirds = 2.0 / 3.0;
    const double a = alpha;
    const double b = alpha - 2.0 * pi / 3.0;
    const double c = alpha + 2.0 * pi / 3.0;
    const double d = std::cos(a) * f_abc[0] + std::cos(b) * f_abc[1] + std::cos(c) * f_abc[2];
    const double q = -std::sin(a) * f_abc[0] - std::sin(b) * f_abc[1] - std::sin(c) * f_abc[2];
    return two_thirds * Vec2(d, q);
}

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
    double w = std::remainder(a, 2.0 * pi);
    if (w <= -pi) w += 2.0 * pi;
    return w;
}

/// Bounded frame-offset angle plus instantaneous angular frequency.
struct AngleState {
    double delta = 0.0; // rad, kept in (-pi, pi]
    double omega = 0.0; // rad/s
};

} // namespace gfm
