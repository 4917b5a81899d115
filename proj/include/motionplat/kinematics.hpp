#pragma once

// Kinematic model of the inverted quadruped carrying the platform.
//
// Frame convention: everything is expressed in the robot body frame, x forward, y left,
// with the legs hanging along -z at zero joint angles. The physical robot is mounted
// upside down, so the platform sits on the -z side of the hips and physical gravity
// acts along +z of this frame.
//
// Each leg is a hip abduction/adduction joint about x followed by a planar two-link chain
// (hip flexion/extension and knee, both about the rotated y axis). Joint order in a
// JointVector is [FL, FR, BL, BR] x [hip_aa, hip_fe, knee].

#include "motionplat/geometry.hpp"

#include <array>
#include <string_view>

namespace motionplat {

constexpr int kNumLegs = 4;
constexpr int kJointsPerLeg = 3;
constexpr int kNumJoints = kNumLegs * kJointsPerLeg;

enum class LegId { FL = 0, FR = 1, BL = 2, BR = 3 };

constexpr std::array<std::string_view, kNumLegs> kLegNames{"FL", "FR", "BL", "BR"};
constexpr std::array<std::string_view, kJointsPerLeg> kJointNames{"hip_aa", "hip_fe", "knee"};

enum class Side { Left, Right };

constexpr double side_sign(Side s) { return s == Side::Left ? 1.0 : -1.0; }

struct LegGeometry {
    Vec3 hip_mount = Vec3::Zero();  ///< hip-AA axis origin, body frame (mm)
    double hip_offset_y = 0.0;      ///< lateral distance of the leg plane from the hip-AA axis (mm), outward
    double l_upper = 160.0;
    double l_lower = 160.0;
    Side side = Side::Left;
};

/// Sign of the knee angle chosen by leg_ik.
enum class KneeBranch { Positive, Negative };

/// Knee placement relative to the platform centre, resolved per leg pair.
enum class KneeBend { Inward, Outward };

struct JointLimits {
    double lower_deg = -170.0;
    double upper_deg = 170.0;
};

struct Robot {
    std::array<LegGeometry, kNumLegs> legs;
    KneeBend front_bend = KneeBend::Inward;
    KneeBend back_bend = KneeBend::Inward;
    JointLimits joint_limits;
};

/// Rigid platform. Corner offsets are in the platform frame, relative to the platform
/// centre; all four lie in the ball-joint plane at z = -z_offset.
struct PlatformGeometry {
    std::array<Vec3, kNumLegs> corner_offsets;
    double z_offset = 0.0;                 ///< ball-joint plane to platform centre (mm), along the platform normal
    Vec3 home_center = Vec3::Zero();       ///< platform centre at the home pose, body frame (mm)
};

struct PlatformPose {
    Vec3 position = Vec3::Zero();  ///< mm, relative to the home centre
    EulerAngles orientation;       ///< deg

    static PlatformPose home() { return {}; }
};

struct WorkspaceLimits {
    double x_max = 255.0;
    double y_max = 105.0;
    double z_max = 105.0;
    double rot_max = 30.0;
    double ball_pivot_max = 30.0;
};

using LegAngles = std::array<double, kJointsPerLeg>;

struct JointVector {
    std::array<double, kNumJoints> q{};

    LegAngles leg(int i) const { return {q[3 * i], q[3 * i + 1], q[3 * i + 2]}; }
    void set_leg(int i, const LegAngles& a) {
        for (int j = 0; j < kJointsPerLeg; ++j) q[3 * i + j] = a[j];
    }
    double& operator[](int i) { return q[i]; }
    double operator[](int i) const { return q[i]; }

    friend bool operator==(const JointVector&, const JointVector&) = default;
};

/// Shipped stand-in geometry: 160/160 mm links, 400 x 300 mm hip rectangle, 20 mm hip
/// offset, 220 x 340 mm corner rectangle 255 mm below the hips.
Robot default_robot();
PlatformGeometry default_platform();

/// Throws InvalidArgumentError naming the offending field.
void validate(const LegGeometry& leg, std::string_view path);
void validate(const PlatformGeometry& platform);
void validate(const WorkspaceLimits& limits);

KneeBranch knee_branch(const Robot& robot, int leg);

Vec3 leg_fk(const LegAngles& q, const LegGeometry& geom);
/// Knee joint position, body frame.
Vec3 leg_knee(const LegAngles& q, const LegGeometry& geom);

/// Closed-form leg IK. Throws UnreachableError carrying the distance to the reachable set.
LegAngles leg_ik(const Vec3& target, const LegGeometry& geom, KneeBranch branch);

/// d(foot position)/d(q) in mm/rad; columns are hip_aa, hip_fe, knee.
Mat3 leg_jacobian(const LegAngles& q, const LegGeometry& geom);

std::array<Vec3, kNumLegs> platform_corners(const PlatformPose& pose, const PlatformGeometry& geom);

struct WorkspaceReport {
    std::array<bool, 3> translation_violation{};  ///< x, y, z
    std::array<bool, 3> rotation_violation{};     ///< rx, ry, rz
    std::array<double, kNumLegs> pivot_deg{};
    std::array<bool, kNumLegs> pivot_violation{};
    std::array<bool, kNumJoints> joint_limit_violation{};

    bool pose_in_bounds() const;
    bool valid() const;
};

/// Box check on translation and per-axis rotation bounds only.
WorkspaceReport check_pose_bounds(const PlatformPose& pose, const WorkspaceLimits& limits);

/// Full report: pose bounds, joint limits and the ball-joint pivot at every corner (angle
/// between the knee-ward distal link axis and the platform normal).
WorkspaceReport workspace_check(const PlatformPose& pose, const JointVector& q, const Robot& robot,
                                const PlatformGeometry& platform, const WorkspaceLimits& limits);

/// Platform pose to the twelve joint targets. Throws WorkspaceError for box, joint-limit or
/// pivot violations and UnreachableError (with leg index) when a corner is out of reach.
JointVector solve_platform_ik(const PlatformPose& pose, const Robot& robot, const PlatformGeometry& platform,
                              const WorkspaceLimits& limits = {});

}  // namespace motionplat
