#pragma once

// Plain-text CSV artifacts. Every file starts with '#'-prefixed metadata lines
// (schema, run id, config hash, dt), then one header row, then data rows.
// Numbers are written with 9 significant digits.

#include "motionplat/sim_env.hpp"
#include "motionplat/trajectory.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace motionplat {

struct FileMeta {
    std::string schema;
    std::string run_id;
    std::string config_hash;
    double dt = 0.0;
};

inline constexpr std::string_view kTrajectorySchema = "motionplat.trajectory/1";
inline constexpr std::string_view kJointTargetSchema = "motionplat.joint_targets/1";
inline constexpr std::string_view kSimLogSchema = "motionplat.sim_log/1";

/// 9 significant digits, shortest of fixed/scientific ("%.9g").
std::string format_number(double v);

/// Writes `content` to a sibling temp file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Column names of the sim log: t, q_target_0..11, q_actual_0..11, qdot_0..11, tau_0..11, current_0..11.
std::vector<std::string> sim_log_columns();

std::string format_sim_log(const SimLog& log, const FileMeta& meta);
/// Throws ParseError on a header mismatch or a malformed row (with its line number).
SimLog parse_sim_log(std::istream& in, FileMeta* meta = nullptr);

void write_log(const std::filesystem::path& path, const SimLog& log, const FileMeta& meta);
SimLog read_log(const std::filesystem::path& path, FileMeta* meta = nullptr);

std::string format_trajectory(const Trajectory& traj, const FileMeta& meta);
Trajectory parse_trajectory(std::istream& in, FileMeta* meta = nullptr);
Trajectory read_trajectory(const std::filesystem::path& path, FileMeta* meta = nullptr);

struct JointTrajectory {
    double dt = 0.0;
    std::vector<double> t;
    std::vector<JointVector> q;
};

std::string format_joint_targets(const JointTrajectory& jt, const FileMeta& meta);
JointTrajectory parse_joint_targets(std::istream& in, FileMeta* meta = nullptr);
JointTrajectory read_joint_targets(const std::filesystem::path& path, FileMeta* meta = nullptr);

/// Generic table writer used for reports and plot data.
std::string format_table(const FileMeta& meta, const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows);

}  // namespace motionplat
