#pragma once

#include <Eigen/Dense>

#include <span>

namespace motionplat {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

constexpr double kPi = 3.14159265358979323846;

constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

/// Euler angles in degrees, intrinsic x-y-z (roll, pitch, yaw): R = Rx(rx) * Ry(ry) * Rz(rz).
struct EulerAngles {
    double rx = 0.0;
    double ry = 0.0;
    double rz = 0.0;

    friend bool operator==(const EulerAngles&, const EulerAngles&) = default;
};

/// Proper rotation (orthonormal, det = +1).
class Rotation {
public:
    Rotation() : m_(Mat3::Identity()) {}

    /// Wraps `m` without re-orthonormalisation; throws InvalidArgumentError when
    /// RᵀR deviates from I or det(R) from 1 by more than `tol`.
    static Rotation from_matrix(const Mat3& m, double tol = 1e-9);
    static Rotation identity() { return {}; }
    /// Right-handed rotation by `angle_rad` about the unit vector `axis`.
    static Rotation about_axis(const Vec3& axis, double angle_rad);

    const Mat3& matrix() const { return m_; }
    Rotation transpose() const { return Rotation(m_.transpose()); }

    Vec3 operator*(const Vec3& v) const { return m_ * v; }
    Rotation operator*(const Rotation& o) const { return Rotation(m_ * o.m_); }

    /// Angle of the relative rotation between the two, radians in [0, pi].
    double angle_to(const Rotation& o) const;

private:
    explicit Rotation(const Mat3& m) : m_(m) {}
    Mat3 m_;
};

struct EulerResult {
    EulerAngles angles;
    /// Set when |ry| is within 1e-7 deg of 90; rz is then pinned to 0 and rx carries the rest.
    bool gimbal_lock = false;
};

Rotation euler_to_rotation(const EulerAngles& e);
EulerResult rotation_to_euler(const Rotation& r);

/// Least-squares rotation R minimising sum |R*source_i - target_i|^2 (Kabsch, SVD with
/// determinant correction). Vectors are used as given, not normalised.
/// Throws DegenerateInputError when either set is collinear, contains a zero vector,
/// or the sizes disagree / fewer than two pairs are supplied.
Rotation align_vectors(std::span<const Vec3> source, std::span<const Vec3> target);

/// Intersection of two lines p1 + s*d1 and p2 + t*d2, or for skew lines the midpoint of
/// their common perpendicular. Throws DegenerateInputError for parallel directions.
Vec3 line_closest_midpoint(const Vec3& p1, const Vec3& d1, const Vec3& p2, const Vec3& d2);

}  // namespace motionplat
