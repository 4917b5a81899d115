#include "motionplat/trajectory.hpp"

#include "motionplat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace motionplat {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw InvalidArgumentError(what);
}

std::size_t sample_count(double duration, double dt) {
    return static_cast<std::size_t>(std::llround(duration / dt)) + 1;
}

Trajectory sample(double duration, double dt, const std::function<PlatformPose(std::size_t, double)>& pose_at) {
    require(dt > 0.0 && std::isfinite(dt), "trajectory: dt must be > 0");
    require(duration >= 0.0 && std::isfinite(duration), "trajectory: duration must be >= 0");
    Trajectory traj;
    traj.dt = dt;
    const std::size_t n = sample_count(duration, dt);
    traj.samples.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) * dt;
        traj.samples.push_back({t, pose_at(k, t)});
    }
    return traj;
}

void check_sine(const SineParams& p) {
    require(p.frequency > 0.0, "sine: frequency must be > 0");
    require(p.run_time >= 0.0 && p.wait_time >= 0.0, "sine: run_time and wait_time must be >= 0");
    require(std::isfinite(p.amplitude) && p.offsets.allFinite(), "sine: amplitude and offsets must be finite");
}

PlatformPose sine_pose(const SineParams& p, double local_t) {
    PlatformPose pose;
    pose.position = p.offsets;
    if (local_t >= p.wait_time) {
        const double value = p.amplitude * std::sin(2.0 * kPi * p.frequency * (local_t - p.wait_time));
        set_pose_component(pose, p.axis, pose_component(pose, p.axis) + value);
    }
    return pose;
}

double wrap180(double deg) {
    const double r = std::remainder(deg, 360.0);
    return r <= -180.0 ? r + 360.0 : r;
}

}  // namespace

std::string_view axis_name(PoseAxis a) {
    switch (a) {
        case PoseAxis::X: return "x";
        case PoseAxis::Y: return "y";
        case PoseAxis::Z: return "z";
        case PoseAxis::RX: return "rx";
        case PoseAxis::RY: return "ry";
        case PoseAxis::RZ: return "rz";
    }
    return "?";
}

PoseAxis parse_axis(std::string_view name) {
    for (PoseAxis a : {PoseAxis::X, PoseAxis::Y, PoseAxis::Z, PoseAxis::RX, PoseAxis::RY, PoseAxis::RZ}) {
        if (axis_name(a) == name) return a;
    }
    throw InvalidArgumentError("unknown pose axis '" + std::string(name) + "'");
}

double pose_component(const PlatformPose& p, PoseAxis a) {
    switch (a) {
        case PoseAxis::X: return p.position.x();
        case PoseAxis::Y: return p.position.y();
        case PoseAxis::Z: return p.position.z();
        case PoseAxis::RX: return p.orientation.rx;
        case PoseAxis::RY: return p.orientation.ry;
        case PoseAxis::RZ: return p.orientation.rz;
    }
    return 0.0;
}

void set_pose_component(PlatformPose& p, PoseAxis a, double value) {
    switch (a) {
        case PoseAxis::X: p.position.x() = value; break;
        case PoseAxis::Y: p.position.y() = value; break;
        case PoseAxis::Z: p.position.z() = value; break;
        case PoseAxis::RX: p.orientation.rx = value; break;
        case PoseAxis::RY: p.orientation.ry = value; break;
        case PoseAxis::RZ: p.orientation.rz = value; break;
    }
}

Trajectory gen_sine(const SineParams& p, double dt) {
    check_sine(p);
    return sample(p.wait_time + p.run_time, dt, [&](std::size_t, double t) { return sine_pose(p, t); });
}

Trajectory gen_sine_sequence(const std::vector<SineParams>& blocks, double dt) {
    require(!blocks.empty(), "sine sequence: no blocks");
    std::vector<double> starts;
    double total = 0.0;
    for (const SineParams& b : blocks) {
        check_sine(b);
        starts.push_back(total);
        total += b.wait_time + b.run_time;
    }
    return sample(total, dt, [&](std::size_t, double t) {
        std::size_t k = blocks.size() - 1;
        while (k > 0 && t < starts[k]) --k;
        return sine_pose(blocks[k], t - starts[k]);
    });
}

Trajectory gen_arbitrary(const std::vector<PlatformPose>& waypoints, const std::vector<double>& segment_times,
                         double dt, Interpolation mode) {
    require(!waypoints.empty(), "arbitrary: need at least one waypoint");
    if (segment_times.size() + 1 != waypoints.size()) {
        std::ostringstream os;
        os << "arbitrary: " << waypoints.size() << " waypoints need " << waypoints.size() - 1
           << " segment times, got " << segment_times.size();
        throw InvalidArgumentError(os.str());
    }
    std::vector<double> ends;
    double total = 0.0;
    for (double s : segment_times) {
        require(s > 0.0 && std::isfinite(s), "arbitrary: segment times must be > 0");
        total += s;
        ends.push_back(total);
    }
    const std::size_t n = sample_count(total, dt);
    return sample(total, dt, [&](std::size_t k, double t) {
        if (segment_times.empty() || k + 1 == n) return waypoints.back();
        std::size_t seg = 0;
        while (seg + 1 < ends.size() && t >= ends[seg]) ++seg;
        const double start = ends[seg] - segment_times[seg];
        double s = std::clamp((t - start) / segment_times[seg], 0.0, 1.0);
        if (mode == Interpolation::CosineBlend) s = 0.5 * (1.0 - std::cos(kPi * s));
        const PlatformPose& a = waypoints[seg];
        const PlatformPose& b = waypoints[seg + 1];
        PlatformPose out;
        out.position = a.position + s * (b.position - a.position);
        out.orientation = {a.orientation.rx + s * (b.orientation.rx - a.orientation.rx),
                           a.orientation.ry + s * (b.orientation.ry - a.orientation.ry),
                           a.orientation.rz + s * (b.orientation.rz - a.orientation.rz)};
        return out;
    });
}

Trajectory gen_step(const PlatformPose& target, double step_time, double total_time, double dt) {
    require(step_time >= 0.0 && step_time <= total_time, "step: need 0 <= step_time <= total_time");
    // Slack absorbs k*dt rounding so that a grid point nominally at step_time takes the target.
    const double edge = step_time - 1e-9 * dt;
    return sample(total_time, dt, [&](std::size_t, double t) { return t >= edge ? target : PlatformPose::home(); });
}

Trajectory gen_circular(const CircularParams& p, double dt) {
    require(p.radius >= 0.0, "circular: radius must be >= 0");
    require(p.rounds >= 1, "circular: rounds must be >= 1");
    require(p.frequency > 0.0, "circular: frequency must be > 0");
    const double dir = p.direction == CircleDirection::CounterClockwise ? 1.0 : -1.0;
    const double duration = static_cast<double>(p.rounds) / p.frequency;
    return sample(duration, dt, [&](std::size_t, double t) {
        const double phase = 2.0 * kPi * p.frequency * t;
        PlatformPose pose;
        if (p.translation_enabled) {
            pose.position.x() = p.radius * std::cos(phase);
            pose.position.y() = dir * p.radius * std::sin(phase);
        }
        if (p.rotation_enabled) {
            pose.orientation.rz = p.rotation_mode == CircularRotationMode::Oscillate
                                      ? dir * p.rot_angle * std::sin(phase)
                                      : wrap180(dir * 360.0 * p.frequency * t);
        }
        return pose;
    });
}

std::vector<TrajectoryWarning> validate_trajectory(const Trajectory& traj, const WorkspaceLimits& limits) {
    std::vector<TrajectoryWarning> out;
    for (std::size_t k = 0; k < traj.samples.size(); ++k) {
        const PlatformPose& pose = traj.samples[k].pose;
        const bool finite = pose.position.allFinite() && std::isfinite(pose.orientation.rx) &&
                            std::isfinite(pose.orientation.ry) && std::isfinite(pose.orientation.rz);
        if (!finite) {
            out.push_back({k, "non-finite pose"});
            continue;
        }
        const WorkspaceReport rep = check_pose_bounds(pose, limits);
        if (!rep.pose_in_bounds()) {
            std::ostringstream os;
            os << "t = " << traj.samples[k].t << " s: pose outside workspace box";
            out.push_back({k, os.str()});
        }
    }
    return out;
}

}  // namespace motionplat
