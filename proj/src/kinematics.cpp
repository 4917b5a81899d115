#include "motionplat/kinematics.hpp"

#include "motionplat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace motionplat {

namespace {

double wrap_pi(double a) {
    a = std::remainder(a, 2.0 * kPi);
    return a <= -kPi ? a + 2.0 * kPi : a;
}

bool is_front(const LegGeometry& g) { return g.hip_mount.x() > 0.0; }

std::string leg_name(int leg) { return std::string(kLegNames.at(static_cast<std::size_t>(leg))); }

}  // namespace

Robot default_robot() {
    Robot r;
    const double hx = 200.0;
    const double hy = 150.0;
    r.legs[0] = {Vec3(hx, hy, 0.0), 20.0, 160.0, 160.0, Side::Left};
    r.legs[1] = {Vec3(hx, -hy, 0.0), 20.0, 160.0, 160.0, Side::Right};
    r.legs[2] = {Vec3(-hx, hy, 0.0), 20.0, 160.0, 160.0, Side::Left};
    r.legs[3] = {Vec3(-hx, -hy, 0.0), 20.0, 160.0, 160.0, Side::Right};
    return r;
}

PlatformGeometry default_platform() {
    PlatformGeometry p;
    p.z_offset = 15.0;
    p.home_center = Vec3(0.0, 0.0, -240.0);
    p.corner_offsets = {Vec3(110.0, 170.0, -15.0), Vec3(110.0, -170.0, -15.0), Vec3(-110.0, 170.0, -15.0),
                        Vec3(-110.0, -170.0, -15.0)};
    return p;
}

void validate(const LegGeometry& leg, std::string_view path) {
    auto fail = [&](const char* field, const char* why) {
        throw InvalidArgumentError(std::string(path) + "." + field + ": " + why);
    };
    if (!leg.hip_mount.allFinite()) fail("hip_mount", "must be finite");
    if (!std::isfinite(leg.hip_offset_y) || leg.hip_offset_y < 0.0) fail("hip_offset_y", "must be >= 0");
    if (!(leg.l_upper > 0.0) || !std::isfinite(leg.l_upper)) fail("l_upper", "must be > 0");
    if (!(leg.l_lower > 0.0) || !std::isfinite(leg.l_lower)) fail("l_lower", "must be > 0");
}

void validate(const PlatformGeometry& p) {
    for (int i = 0; i < kNumLegs; ++i) {
        if (!p.corner_offsets[i].allFinite()) {
            throw InvalidArgumentError("platform.corner_" + leg_name(i) + ": must be finite");
        }
        if (std::abs(p.corner_offsets[i].z() + p.z_offset) > 1e-9) {
            throw InvalidArgumentError("platform.corner_" + leg_name(i) + ": z must equal -z_offset");
        }
    }
    if (!p.home_center.allFinite()) throw InvalidArgumentError("platform.home_center: must be finite");
    const auto& c = p.corner_offsets;
    // Rectangle: the FL-BR and FR-BL diagonals have equal length and a common midpoint.
    const double diag_a = (c[3] - c[0]).norm();
    const double diag_b = (c[2] - c[1]).norm();
    const Vec3 mid_gap = 0.5 * (c[0] + c[3]) - 0.5 * (c[1] + c[2]);
    if (std::abs(diag_a - diag_b) > 1e-9 || mid_gap.norm() > 1e-9 || diag_a < 1e-9) {
        throw InvalidArgumentError("platform.corner_offsets: corners must form a rectangle");
    }
    const Vec3 centroid = 0.25 * (c[0] + c[1] + c[2] + c[3]);
    if (std::hypot(centroid.x(), centroid.y()) > 1e-9) {
        throw InvalidArgumentError("platform.corner_offsets: corners must be centred on the platform centre");
    }
}

void validate(const WorkspaceLimits& l) {
    const std::array<std::pair<const char*, double>, 5> fields{
        {{"x_max", l.x_max}, {"y_max", l.y_max}, {"z_max", l.z_max}, {"rot_max", l.rot_max},
         {"ball_pivot_max", l.ball_pivot_max}}};
    for (const auto& [name, value] : fields) {
        if (!(value > 0.0) || !std::isfinite(value)) {
            throw InvalidArgumentError(std::string("workspace.") + name + ": must be > 0");
        }
    }
}

KneeBranch knee_branch(const Robot& robot, int leg) {
    const LegGeometry& g = robot.legs.at(static_cast<std::size_t>(leg));
    const bool front = is_front(g);
    const KneeBend bend = front ? robot.front_bend : robot.back_bend;
    // Positive knee angles put the knee on the -x side of the hip-foot line.
    const bool positive = front == (bend == KneeBend::Inward);
    return positive ? KneeBranch::Positive : KneeBranch::Negative;
}

Vec3 leg_fk(const LegAngles& q, const LegGeometry& g) {
    const double lateral = side_sign(g.side) * g.hip_offset_y;
    const double xs = g.l_upper * std::sin(q[1]) + g.l_lower * std::sin(q[1] + q[2]);
    const double zs = -(g.l_upper * std::cos(q[1]) + g.l_lower * std::cos(q[1] + q[2]));
    const double ca = std::cos(q[0]);
    const double sa = std::sin(q[0]);
    return g.hip_mount + Vec3(xs, lateral * ca - zs * sa, lateral * sa + zs * ca);
}

Vec3 leg_knee(const LegAngles& q, const LegGeometry& g) {
    const double lateral = side_sign(g.side) * g.hip_offset_y;
    const double xs = g.l_upper * std::sin(q[1]);
    const double zs = -g.l_upper * std::cos(q[1]);
    const double ca = std::cos(q[0]);
    const double sa = std::sin(q[0]);
    return g.hip_mount + Vec3(xs, lateral * ca - zs * sa, lateral * sa + zs * ca);
}

LegAngles leg_ik(const Vec3& target, const LegGeometry& g, KneeBranch branch) {
    if (!target.allFinite()) throw InvalidArgumentError("leg_ik: non-finite target");
    const Vec3 d = target - g.hip_mount;
    const double lateral = side_sign(g.side) * g.hip_offset_y;

    // Hip-AA: the y-z projection of the foot is the rotated point (lateral, zs).
    const double r_yz = std::hypot(d.y(), d.z());
    if (r_yz < g.hip_offset_y) {
        throw UnreachableError("leg_ik: target inside the hip offset circle", g.hip_offset_y - r_yz);
    }
    const double zs = -std::sqrt(std::max(0.0, r_yz * r_yz - g.hip_offset_y * g.hip_offset_y));
    const double hip_aa = wrap_pi(std::atan2(d.z(), d.y()) - std::atan2(zs, lateral));

    const double xs = d.x();
    const double dist = std::hypot(xs, zs);
    const double reach_max = g.l_upper + g.l_lower;
    const double reach_min = std::abs(g.l_upper - g.l_lower);
    constexpr double kReachSlack = 1e-9;
    if (dist > reach_max + kReachSlack) {
        std::ostringstream os;
        os << "leg_ik: target beyond full extension by " << dist - reach_max << " mm";
        throw UnreachableError(os.str(), dist - reach_max);
    }
    if (dist < reach_min - kReachSlack) {
        std::ostringstream os;
        os << "leg_ik: target inside minimum reach by " << reach_min - dist << " mm";
        throw UnreachableError(os.str(), reach_min - dist);
    }
    const double cos_knee = std::clamp(
        (dist * dist - g.l_upper * g.l_upper - g.l_lower * g.l_lower) / (2.0 * g.l_upper * g.l_lower), -1.0, 1.0);
    const double knee = (branch == KneeBranch::Positive ? 1.0 : -1.0) * std::acos(cos_knee);
    // Foot direction measured from -z towards +x, minus the interior offset of the upper link.
    const double hip_fe =
        std::atan2(xs, -zs) - std::atan2(g.l_lower * std::sin(knee), g.l_upper + g.l_lower * std::cos(knee));
    return {hip_aa, wrap_pi(hip_fe), knee};
}

Mat3 leg_jacobian(const LegAngles& q, const LegGeometry& g) {
    const double lateral = side_sign(g.side) * g.hip_offset_y;
    const double s1 = std::sin(q[1]);
    const double c1 = std::cos(q[1]);
    const double s12 = std::sin(q[1] + q[2]);
    const double c12 = std::cos(q[1] + q[2]);
    const double ca = std::cos(q[0]);
    const double sa = std::sin(q[0]);
    const double zs = -(g.l_upper * c1 + g.l_lower * c12);

    Mat3 j;
    j.col(0) = Vec3(0.0, -lateral * sa - zs * ca, lateral * ca - zs * sa);
    const double dzs_fe = g.l_upper * s1 + g.l_lower * s12;
    j.col(1) = Vec3(g.l_upper * c1 + g.l_lower * c12, -dzs_fe * sa, dzs_fe * ca);
    const double dzs_knee = g.l_lower * s12;
    j.col(2) = Vec3(g.l_lower * c12, -dzs_knee * sa, dzs_knee * ca);
    return j;
}

std::array<Vec3, kNumLegs> platform_corners(const PlatformPose& pose, const PlatformGeometry& geom) {
    const Rotation r = euler_to_rotation(pose.orientation);
    const Vec3 center = geom.home_center + pose.position;
    std::array<Vec3, kNumLegs> out;
    for (int i = 0; i < kNumLegs; ++i) out[i] = center + r * geom.corner_offsets[i];
    return out;
}

bool WorkspaceReport::pose_in_bounds() const {
    auto any = [](const auto& a) { return std::any_of(a.begin(), a.end(), [](bool b) { return b; }); };
    return !any(translation_violation) && !any(rotation_violation);
}

bool WorkspaceReport::valid() const {
    auto any = [](const auto& a) { return std::any_of(a.begin(), a.end(), [](bool b) { return b; }); };
    return pose_in_bounds() && !any(pivot_violation) && !any(joint_limit_violation);
}

WorkspaceReport check_pose_bounds(const PlatformPose& pose, const WorkspaceLimits& limits) {
    WorkspaceReport rep;
    const std::array<double, 3> tmax{limits.x_max, limits.y_max, limits.z_max};
    const std::array<double, 3> rot{pose.orientation.rx, pose.orientation.ry, pose.orientation.rz};
    for (int a = 0; a < 3; ++a) {
        rep.translation_violation[a] = !(std::abs(pose.position[a]) <= tmax[a]);
        rep.rotation_violation[a] = !(std::abs(rot[a]) <= limits.rot_max);
    }
    return rep;
}

WorkspaceReport workspace_check(const PlatformPose& pose, const JointVector& q, const Robot& robot,
                                const PlatformGeometry& /*platform*/, const WorkspaceLimits& limits) {
    WorkspaceReport rep = check_pose_bounds(pose, limits);
    const Vec3 normal = euler_to_rotation(pose.orientation) * Vec3::UnitZ();
    for (int i = 0; i < kNumLegs; ++i) {
        const LegAngles a = q.leg(i);
        const LegGeometry& g = robot.legs[i];
        const Vec3 distal = (leg_knee(a, g) - leg_fk(a, g)).normalized();
        rep.pivot_deg[i] = rad2deg(std::acos(std::clamp(distal.dot(normal), -1.0, 1.0)));
        rep.pivot_violation[i] = !(rep.pivot_deg[i] <= limits.ball_pivot_max);
        for (int j = 0; j < kJointsPerLeg; ++j) {
            const double v = a[j];
            rep.joint_limit_violation[3 * i + j] =
                !(rad2deg(v) >= robot.joint_limits.lower_deg && rad2deg(v) <= robot.joint_limits.upper_deg);
        }
    }
    return rep;
}

JointVector solve_platform_ik(const PlatformPose& pose, const Robot& robot, const PlatformGeometry& platform,
                              const WorkspaceLimits& limits) {
    const WorkspaceReport bounds = check_pose_bounds(pose, limits);
    if (!bounds.pose_in_bounds()) {
        std::ostringstream os;
        os << "pose outside workspace: position (" << pose.position.x() << ", " << pose.position.y() << ", "
           << pose.position.z() << ") mm, orientation (" << pose.orientation.rx << ", " << pose.orientation.ry
           << ", " << pose.orientation.rz << ") deg";
        throw WorkspaceError(os.str());
    }

    const auto corners = platform_corners(pose, platform);
    JointVector out;
    for (int i = 0; i < kNumLegs; ++i) {
        try {
            out.set_leg(i, leg_ik(corners[i], robot.legs[i], knee_branch(robot, i)));
        } catch (const UnreachableError& e) {
            throw UnreachableError("leg " + leg_name(i) + ": " + e.what(), e.deficit(), i);
        }
    }

    const WorkspaceReport rep = workspace_check(pose, out, robot, platform, limits);
    for (int k = 0; k < kNumJoints; ++k) {
        if (rep.joint_limit_violation[k]) {
            throw WorkspaceError("leg " + leg_name(k / 3) + " joint " +
                                 std::string(kJointNames[static_cast<std::size_t>(k % 3)]) + " outside joint limits");
        }
    }
    for (int i = 0; i < kNumLegs; ++i) {
        if (rep.pivot_violation[i]) {
            std::ostringstream os;
            os << "leg " << leg_name(i) << ": ball-joint pivot " << rep.pivot_deg[i] << " deg exceeds "
               << limits.ball_pivot_max << " deg";
            throw WorkspaceError(os.str());
        }
    }
    return out;
}

}  // namespace motionplat
