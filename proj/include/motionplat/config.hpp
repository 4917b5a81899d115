#pragma once

// Line-oriented configuration:
//
//   # comment
//   [section]
//   key = value
//
// Sections: leg.FL, leg.FR, leg.BL, leg.BR, robot, platform (the five geometry sections
// plus platform are required), workspace, actuator, sim, filter, post, trajectory, sine,
// arbitrary, step, circular. Unknown sections or keys are errors.

#include "motionplat/butterworth.hpp"
#include "motionplat/kinematics.hpp"
#include "motionplat/post_processing.hpp"
#include "motionplat/sim_env.hpp"
#include "motionplat/trajectory.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace motionplat {

enum class TrajectoryKind { Sine, Arbitrary, Step, Circular };
enum class RateProfile { Sim, Hardware };

constexpr double kSimRateHz = 240.0;
constexpr double kHardwareRateHz = 1000.0;

std::string_view to_string(TrajectoryKind k);
TrajectoryKind parse_trajectory_kind(std::string_view s);
std::string_view to_string(RateProfile p);
RateProfile parse_rate_profile(std::string_view s);

/// One sine block per listed axis, played back to back.
struct SineConfig {
    std::vector<PoseAxis> axes{PoseAxis::X, PoseAxis::Y, PoseAxis::Z, PoseAxis::RX, PoseAxis::RY, PoseAxis::RZ};
    double run_time = 3.0;
    double wait_time = 2.0;
    double frequency = 2.0;
    double amplitude_translation = 20.0;  ///< mm
    double amplitude_rotation = 10.0;     ///< deg
    Vec3 offsets = Vec3::Zero();

    std::vector<SineParams> blocks() const;
};

struct ArbitraryConfig {
    std::vector<PlatformPose> waypoints;
    std::vector<double> segment_times;
    Interpolation interpolation = Interpolation::Linear;
};

struct StepConfig {
    PlatformPose target;
    double step_time = 0.5;
    double total_time = 2.0;
};

struct Config {
    Robot robot = default_robot();
    PlatformGeometry platform = default_platform();
    WorkspaceLimits workspace;
    ActuatorParams actuator;
    SimParams sim;
    FilterParams filter;
    ZOffsetMode z_offset_mode = ZOffsetMode::World;

    TrajectoryKind trajectory = TrajectoryKind::Sine;
    RateProfile profile = RateProfile::Hardware;
    std::optional<double> dt_override;

    SineConfig sine;
    ArbitraryConfig arbitrary;
    StepConfig step;
    CircularParams circular;

    Config();

    /// Control/sample period: the override when set, else the profile rate.
    double dt() const;
};

/// Validates every embedded invariant; InvalidArgumentError names the field path.
void validate(const Config& c);

/// Throws ParseError (with line) for syntax, unknown keys or sections, missing required
/// sections; InvalidArgumentError for invariant violations.
Config parse_config(std::string_view text);
Config load_config(const std::filesystem::path& path);

/// Canonical text form; parse_config(write_config(c)) reproduces c exactly.
std::string write_config(const Config& c);

/// FNV-1a 64 of the canonical text, as 16 hex digits.
std::string config_hash(const Config& c);

}  // namespace motionplat
