#include "motionplat/post_processing.hpp"

#include "motionplat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace motionplat {

namespace {

double wrap180(double deg) {
    const double r = std::remainder(deg, 360.0);
    return r <= -180.0 ? r + 360.0 : r;
}

std::vector<double> channel(const std::vector<PlatformPose>& poses, int c) {
    std::vector<double> out;
    out.reserve(poses.size());
    for (const PlatformPose& p : poses) out.push_back(to_channels(p)[static_cast<std::size_t>(c)]);
    if (c >= 3) {
        for (std::size_t k = 1; k < out.size(); ++k) out[k] = out[k - 1] + wrap180(out[k] - out[k - 1]);
    }
    return out;
}

std::array<Vec3, 3> frame_axes(const std::array<Vec3, kNumLegs>& c) {
    const Vec3 ax = (c[2] - c[0]).normalized();  // FL -> BL
    const Vec3 ay = (c[1] - c[0]).normalized();  // FL -> FR
    return {ax, ay, ax.cross(ay).normalized()};
}

}  // namespace

PoseChannels to_channels(const PlatformPose& p) {
    return {p.position.x(), p.position.y(), p.position.z(), p.orientation.rx, p.orientation.ry, p.orientation.rz};
}

PlatformPose from_channels(const PoseChannels& c) {
    PlatformPose p;
    p.position = Vec3(c[0], c[1], c[2]);
    p.orientation = {c[3], c[4], c[5]};
    return p;
}

PlatformPose reconstruct_pose(const JointVector& q, const Robot& robot, const PlatformGeometry& platform,
                              ZOffsetMode mode) {
    std::array<Vec3, kNumLegs> balls;
    for (int i = 0; i < kNumLegs; ++i) balls[i] = leg_fk(q.leg(i), robot.legs[i]);

    const Vec3 mid = line_closest_midpoint(balls[0], balls[3] - balls[0], balls[1], balls[2] - balls[1]);

    const auto nominal = frame_axes(platform.corner_offsets);
    const auto measured = frame_axes(balls);
    if (!measured[2].allFinite()) throw DegenerateInputError("reconstruct_pose: collapsed corner set");
    const Rotation r = align_vectors(nominal, measured);

    const Vec3 up = mode == ZOffsetMode::World ? Vec3::UnitZ() : r * Vec3::UnitZ();
    PlatformPose out;
    out.position = mid + platform.z_offset * up - platform.home_center;
    out.orientation = rotation_to_euler(r).angles;
    return out;
}

std::vector<double> derivative(const std::vector<double>& x, double dt) {
    const std::size_t n = x.size();
    if (n < 3) throw InvalidArgumentError("differentiate: need at least 3 samples, got " + std::to_string(n));
    std::vector<double> d(n);
    const double inv2 = 1.0 / (2.0 * dt);
    d[0] = (-3.0 * x[0] + 4.0 * x[1] - x[2]) * inv2;
    for (std::size_t k = 1; k + 1 < n; ++k) d[k] = (x[k + 1] - x[k - 1]) * inv2;
    d[n - 1] = (3.0 * x[n - 1] - 4.0 * x[n - 2] + x[n - 3]) * inv2;
    return d;
}

PoseSeries differentiate(const PoseSeries& series) {
    if (!(series.dt > 0.0)) throw InvalidArgumentError("differentiate: dt must be > 0");
    const std::size_t n = series.poses.size();
    if (n < 3) throw InvalidArgumentError("differentiate: need at least 3 samples, got " + std::to_string(n));
    PoseSeries out = series;
    out.velocity.assign(n, PoseChannels{});
    out.acceleration.assign(n, PoseChannels{});
    for (int c = 0; c < 6; ++c) {
        const auto v = derivative(channel(series.poses, c), series.dt);
        const auto a = derivative(v, series.dt);
        for (std::size_t k = 0; k < n; ++k) {
            out.velocity[k][static_cast<std::size_t>(c)] = v[k];
            out.acceleration[k][static_cast<std::size_t>(c)] = a[k];
        }
    }
    return out;
}

PoseSeries filter_pose_series(const PoseSeries& series, const FilterParams& p) {
    if (!(series.dt > 0.0)) throw InvalidArgumentError("filter: dt must be > 0");
    PoseSeries out;
    out.dt = series.dt;
    out.poses.assign(series.poses.size(), PlatformPose{});
    std::vector<PoseChannels> chans(series.poses.size());
    for (int c = 0; c < 6; ++c) {
        const auto y = butterworth_filter(channel(series.poses, c), 1.0 / series.dt, p);
        for (std::size_t k = 0; k < y.size(); ++k) {
            chans[k][static_cast<std::size_t>(c)] = c >= 3 ? wrap180(y[k]) : y[k];
        }
    }
    for (std::size_t k = 0; k < chans.size(); ++k) out.poses[k] = from_channels(chans[k]);
    return out;
}

RmseReport rmse_report(const PoseSeries& target, const PoseSeries& actual) {
    if (target.poses.size() != actual.poses.size()) {
        throw InvalidArgumentError("rmse_report: length mismatch (" + std::to_string(target.poses.size()) + " vs " +
                                   std::to_string(actual.poses.size()) + ")");
    }
    if (std::abs(target.dt - actual.dt) > 1e-12 * std::max(1.0, std::abs(target.dt))) {
        throw InvalidArgumentError("rmse_report: dt mismatch");
    }
    if (target.poses.empty()) throw InvalidArgumentError("rmse_report: empty series");

    PoseChannels sq{};
    for (std::size_t k = 0; k < target.poses.size(); ++k) {
        const PoseChannels a = to_channels(target.poses[k]);
        const PoseChannels b = to_channels(actual.poses[k]);
        for (std::size_t c = 0; c < 6; ++c) {
            const double e = c >= 3 ? wrap180(a[c] - b[c]) : a[c] - b[c];
            sq[c] += e * e;
        }
    }
    const double n = static_cast<double>(target.poses.size());
    RmseReport rep;
    for (std::size_t c = 0; c < 3; ++c) {
        rep.translation_mm[c] = std::sqrt(sq[c] / n);
        rep.rotation_deg[c] = std::sqrt(sq[c + 3] / n);
    }
    rep.translation_avg_mm = (rep.translation_mm[0] + rep.translation_mm[1] + rep.translation_mm[2]) / 3.0;
    rep.rotation_avg_deg = (rep.rotation_deg[0] + rep.rotation_deg[1] + rep.rotation_deg[2]) / 3.0;
    return rep;
}

JointRmse joint_rmse(const std::vector<JointVector>& target, const std::vector<JointVector>& actual) {
    if (target.size() != actual.size()) {
        throw InvalidArgumentError("joint_rmse: length mismatch (" + std::to_string(target.size()) + " vs " +
                                   std::to_string(actual.size()) + ")");
    }
    if (target.empty()) throw InvalidArgumentError("joint_rmse: empty series");
    JointArray sq{};
    for (std::size_t k = 0; k < target.size(); ++k) {
        for (int j = 0; j < kNumJoints; ++j) {
            const double e = rad2deg(target[k][j] - actual[k][j]);
            sq[j] += e * e;
        }
    }
    JointRmse out;
    for (int j = 0; j < kNumJoints; ++j) out.per_joint_deg[j] = std::sqrt(sq[j] / static_cast<double>(target.size()));
    for (int i = 0; i < kNumLegs; ++i) {
        out.leg_avg_deg[i] = (out.per_joint_deg[3 * i] + out.per_joint_deg[3 * i + 1] + out.per_joint_deg[3 * i + 2]) / 3.0;
    }
    return out;
}

}  // namespace motionplat
