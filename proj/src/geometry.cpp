#include "motionplat/geometry.hpp"

#include "motionplat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace motionplat {

Rotation Rotation::from_matrix(const Mat3& m, double tol) {
    const double ortho = (m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff();
    const double det = m.determinant();
    if (!std::isfinite(ortho) || ortho > tol || std::abs(det - 1.0) > tol) {
        throw InvalidArgumentError("matrix is not a proper rotation (|RtR - I| = " +
                                   std::to_string(ortho) + ", det = " + std::to_string(det) + ")");
    }
    return Rotation(m);
}

Rotation Rotation::about_axis(const Vec3& axis, double angle_rad) {
    return Rotation(Eigen::AngleAxisd(angle_rad, axis.normalized()).toRotationMatrix());
}

double Rotation::angle_to(const Rotation& o) const {
    const Mat3 rel = m_.transpose() * o.m_;
    // atan2 form keeps precision for tiny angles where acos((tr - 1)/2) does not.
    const Vec3 axis(rel(2, 1) - rel(1, 2), rel(0, 2) - rel(2, 0), rel(1, 0) - rel(0, 1));
    return std::atan2(0.5 * axis.norm(), 0.5 * (rel.trace() - 1.0));
}

Rotation euler_to_rotation(const EulerAngles& e) {
    const Mat3 rx = Eigen::AngleAxisd(deg2rad(e.rx), Vec3::UnitX()).toRotationMatrix();
    const Mat3 ry = Eigen::AngleAxisd(deg2rad(e.ry), Vec3::UnitY()).toRotationMatrix();
    const Mat3 rz = Eigen::AngleAxisd(deg2rad(e.rz), Vec3::UnitZ()).toRotationMatrix();
    return Rotation::from_matrix(rx * ry * rz, 1e-9);
}

EulerResult rotation_to_euler(const Rotation& r) {
    const Mat3& m = r.matrix();
    EulerResult out;
    // R = Rx Ry Rz  =>  R(0,2) = sin(ry), R(1,2) = -sin(rx)cos(ry), R(2,2) = cos(rx)cos(ry),
    //                   R(0,1) = -cos(ry)sin(rz), R(0,0) = cos(ry)cos(rz).
    const double cos_ry = std::hypot(m(1, 2), m(2, 2));
    const double ry = std::atan2(m(0, 2), cos_ry);
    out.angles.ry = rad2deg(ry);
    if (cos_ry < std::sin(deg2rad(1e-7))) {
        out.gimbal_lock = true;
        out.angles.rz = 0.0;
        out.angles.rx = rad2deg(std::atan2(m(2, 1), m(1, 1)));
        return out;
    }
    out.angles.rx = rad2deg(std::atan2(-m(1, 2), m(2, 2)));
    out.angles.rz = rad2deg(std::atan2(-m(0, 1), m(0, 0)));
    return out;
}

namespace {

void require_spanning(std::span<const Vec3> vs, const char* which) {
    double best = 0.0;
    for (const Vec3& v : vs) {
        if (!(v.norm() > 1e-12)) {
            throw DegenerateInputError(std::string("align_vectors: zero-length ") + which + " vector");
        }
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            best = std::max(best, vs[i].normalized().cross(vs[j].normalized()).norm());
        }
    }
    if (best < 1e-9) {
        throw DegenerateInputError(std::string("align_vectors: ") + which + " vectors are collinear");
    }
}

}  // namespace

Rotation align_vectors(std::span<const Vec3> source, std::span<const Vec3> target) {
    if (source.size() != target.size()) {
        throw DegenerateInputError("align_vectors: source/target size mismatch");
    }
    if (source.size() < 2) {
        throw DegenerateInputError("align_vectors: need at least two vector pairs");
    }
    require_spanning(source, "source");
    require_spanning(target, "target");

    Mat3 h = Mat3::Zero();
    for (std::size_t i = 0; i < source.size(); ++i) {
        h += source[i] * target[i].transpose();
    }
    const Eigen::JacobiSVD<Mat3> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Mat3& u = svd.matrixU();
    const Mat3& v = svd.matrixV();
    Mat3 d = Mat3::Identity();
    d(2, 2) = (v * u.transpose()).determinant() < 0.0 ? -1.0 : 1.0;
    Mat3 rot = v * d * u.transpose();

    // One Newton-Schulz step: the SVD factors are orthonormal only to ~1e-15 per column.
    rot = 1.5 * rot - 0.5 * rot * rot.transpose() * rot;
    return Rotation::from_matrix(rot, 1e-9);
}

Vec3 line_closest_midpoint(const Vec3& p1, const Vec3& d1, const Vec3& p2, const Vec3& d2) {
    const double n1 = d1.norm();
    const double n2 = d2.norm();
    if (!(n1 > 0.0) || !(n2 > 0.0)) {
        throw DegenerateInputError("line_closest_midpoint: zero direction");
    }
    const Vec3 u = d1 / n1;
    const Vec3 v = d2 / n2;
    const double b = u.dot(v);
    const double denom = 1.0 - b * b;
    if (u.cross(v).norm() < 1e-12) {
        throw DegenerateInputError("line_closest_midpoint: lines are parallel");
    }
    const Vec3 w = p1 - p2;
    const double d = u.dot(w);
    const double e = v.dot(w);
    const double s = (b * e - d) / denom;
    const double t = (e - b * d) / denom;
    return 0.5 * ((p1 + s * u) + (p2 + t * v));
}

}  // namespace motionplat
