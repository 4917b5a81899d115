#pragma once

// Platform pose from measured joint angles, smoothing, numerical derivatives and the
// tracking-error (RMSE) tables.

#include "motionplat/butterworth.hpp"
#include "motionplat/kinematics.hpp"
#include "motionplat/sim_env.hpp"

#include <array>
#include <vector>

namespace motionplat {

/// Where the ball-joint-plane-to-centre offset is applied during reconstruction.
enum class ZOffsetMode {
    World,           ///< constant offset along body z; exact only without tilt
    PlatformNormal,  ///< offset along the reconstructed platform normal
};

/// Ball joints from leg FK, centre from the intersection of the FL-BR and FR-BL diagonals,
/// axes from FL->BL, FL->FR and their cross product, orientation by aligning the nominal
/// axes onto the measured ones. Throws DegenerateInputError for a collapsed corner set.
PlatformPose reconstruct_pose(const JointVector& q, const Robot& robot, const PlatformGeometry& platform,
                              ZOffsetMode mode = ZOffsetMode::World);

/// Six channels in x, y, z (mm), rx, ry, rz (deg) order.
using PoseChannels = std::array<double, 6>;

PoseChannels to_channels(const PlatformPose& p);
PlatformPose from_channels(const PoseChannels& c);

struct PoseSeries {
    double dt = 0.0;
    std::vector<PlatformPose> poses;
    std::vector<PoseChannels> velocity;      ///< mm/s, deg/s; empty until differentiate()
    std::vector<PoseChannels> acceleration;  ///< mm/s^2, deg/s^2
};

/// Central differences inside, second-order one-sided differences at both ends; acceleration
/// is the derivative of the velocity. Rotation channels are unwrapped first and give Euler
/// rates, not body rates. Throws InvalidArgumentError below 3 samples.
PoseSeries differentiate(const PoseSeries& series);

/// First derivative of a uniformly sampled scalar sequence (same scheme as differentiate).
std::vector<double> derivative(const std::vector<double>& x, double dt);

/// Butterworth-filters every channel (rotations unwrapped before filtering).
PoseSeries filter_pose_series(const PoseSeries& series, const FilterParams& p);

struct RmseReport {
    std::array<double, 3> translation_mm{};
    std::array<double, 3> rotation_deg{};
    double translation_avg_mm = 0.0;
    double rotation_avg_deg = 0.0;
};

/// Per-axis RMSE; averages are exact arithmetic means of the three axes. Rotation errors are
/// wrapped to (-180, 180]. Throws InvalidArgumentError on length or dt mismatch.
RmseReport rmse_report(const PoseSeries& target, const PoseSeries& actual);

struct JointRmse {
    JointArray per_joint_deg{};
    std::array<double, kNumLegs> leg_avg_deg{};
};

JointRmse joint_rmse(const std::vector<JointVector>& target, const std::vector<JointVector>& actual);

}  // namespace motionplat
