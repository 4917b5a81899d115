#pragma once

// The four processing stages and the run directory they share:
//
//   runs/<run-id>/config.ini          effective configuration snapshot
//                 trajectory.csv      gen   platform targets
//                 joint_targets.csv   ik    twelve joint targets per sample
//                 sim_log.csv         sim   per-tick simulator record
//                 report.csv          post  pose RMSE table
//                 joint_rmse.csv      post  per-joint RMSE
//                 pose_series.csv     post  target/calculated pose with derivatives
//                 plot/*.csv          post  one t/target/actual file per channel
//
// Each stage checks that its upstream artifact exists and carries the same config hash.

#include "motionplat/config.hpp"
#include "motionplat/csv_io.hpp"
#include "motionplat/errors.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace motionplat {

enum class Stage { Gen, Ik, Sim, Post, All };

std::string_view to_string(Stage s);
Stage parse_stage(std::string_view s);

class StageError : public Error {
public:
    StageError(Stage stage, const std::string& what)
        : Error(std::string(to_string(stage)) + ": " + what), stage_(stage) {}
    Stage stage() const noexcept { return stage_; }

private:
    Stage stage_;
};

namespace artifact {
inline constexpr const char* kConfig = "config.ini";
inline constexpr const char* kTrajectory = "trajectory.csv";
inline constexpr const char* kJointTargets = "joint_targets.csv";
inline constexpr const char* kSimLog = "sim_log.csv";
inline constexpr const char* kReport = "report.csv";
inline constexpr const char* kJointRmse = "joint_rmse.csv";
inline constexpr const char* kPoseSeries = "pose_series.csv";
inline constexpr const char* kPlotDir = "plot";
}  // namespace artifact

/// Runs root: $MOTIONPLAT_RUNS_DIR when set, else ./runs.
std::filesystem::path runs_root_from_env();

Trajectory build_trajectory(const Config& c);

/// Throws StageError naming the first sample that cannot be solved.
std::vector<JointVector> solve_trajectory_ik(const Trajectory& traj, const Config& c);

struct PostResult {
    PoseSeries target;      ///< differentiated target poses
    PoseSeries calculated;  ///< reconstructed, filtered, differentiated
    RmseReport pose_rmse;
    JointRmse joints;
};

PostResult post_process(const Trajectory& target, const SimLog& log, const Config& c);

/// Table II layout: translation x/y/z, translation average, rotation x/y/z, rotation average.
std::string format_rmse_report(const RmseReport& r, const FileMeta& meta);
std::string format_joint_rmse(const JointRmse& r, const FileMeta& meta);

struct RunContext {
    Config config;
    std::filesystem::path runs_root;
    std::string run_id;

    std::filesystem::path run_dir() const { return runs_root / run_id; }
};

struct StageOutput {
    std::vector<std::filesystem::path> files;
    std::vector<std::string> warnings;
};

/// Runs one stage (or all four). Errors surface as StageError.
StageOutput run_stage(Stage stage, const RunContext& ctx);

}  // namespace motionplat
