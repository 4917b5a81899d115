#pragma once

#include "motionplat/kinematics.hpp"

#include <string>
#include <vector>

namespace motionplat {

struct TrajectorySample {
    double t = 0.0;
    PlatformPose pose;
};

/// Uniformly sampled platform targets, t_k = k * dt.
struct Trajectory {
    double dt = 1e-3;
    std::vector<TrajectorySample> samples;

    std::size_t size() const { return samples.size(); }
    double duration() const { return samples.empty() ? 0.0 : samples.back().t; }
};

/// Single pose channel: a translation axis (mm) or a rotation axis (deg).
enum class PoseAxis { X, Y, Z, RX, RY, RZ };

constexpr bool is_rotation(PoseAxis a) { return a == PoseAxis::RX || a == PoseAxis::RY || a == PoseAxis::RZ; }
std::string_view axis_name(PoseAxis a);
PoseAxis parse_axis(std::string_view name);

double pose_component(const PlatformPose& p, PoseAxis a);
void set_pose_component(PlatformPose& p, PoseAxis a, double value);

struct SineParams {
    double run_time = 3.0;
    double wait_time = 2.0;
    PoseAxis axis = PoseAxis::X;
    double frequency = 2.0;
    double amplitude = 20.0;  ///< mm for translation axes, deg for rotation axes
    Vec3 offsets = Vec3::Zero();
};

/// `wait_time` at home (+ offsets), then `run_time` of amplitude * sin(2 pi f (t - wait_time)).
Trajectory gen_sine(const SineParams& p, double dt);

/// Back-to-back gen_sine blocks, one per axis, sharing the boundary samples.
Trajectory gen_sine_sequence(const std::vector<SineParams>& blocks, double dt);

enum class Interpolation { Linear, CosineBlend };

/// Piecewise interpolation through `waypoints`, segment k lasting segment_times[k] seconds.
/// Position and each Euler angle are interpolated independently.
Trajectory gen_arbitrary(const std::vector<PlatformPose>& waypoints, const std::vector<double>& segment_times,
                         double dt, Interpolation mode = Interpolation::Linear);

/// Home for t < step_time, `target` from step_time on (right-continuous).
Trajectory gen_step(const PlatformPose& target, double step_time, double total_time, double dt);

enum class CircleDirection { Clockwise, CounterClockwise };
enum class CircularRotationMode { Oscillate, Spin };

struct CircularParams {
    double radius = 20.0;     ///< mm
    double rot_angle = 10.0;  ///< deg
    int rounds = 20;
    double frequency = 2.0;
    CircleDirection direction = CircleDirection::Clockwise;
    bool translation_enabled = true;
    bool rotation_enabled = true;
    CircularRotationMode rotation_mode = CircularRotationMode::Oscillate;
};

/// x-y circle of `radius` starting at (radius, 0); z rotation either oscillating within
/// +-rot_angle (Oscillate) or turning a full revolution per round (Spin, wrapped to +-180).
Trajectory gen_circular(const CircularParams& p, double dt);

struct TrajectoryWarning {
    std::size_t index;
    std::string message;
};

/// Samples whose pose falls outside the translation/rotation box.
std::vector<TrajectoryWarning> validate_trajectory(const Trajectory& traj, const WorkspaceLimits& limits);

}  // namespace motionplat
