#include "motionplat/pipeline.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace motionplat {

namespace fs = std::filesystem;

namespace {

FileMeta meta_for(const RunContext& ctx, double dt) {
    FileMeta m;
    m.run_id = ctx.run_id;
    m.config_hash = config_hash(ctx.config);
    m.dt = dt;
    return m;
}

void require_upstream(Stage stage, const fs::path& path, const char* producer) {
    if (!fs::exists(path)) {
        throw StageError(stage, "missing upstream artifact " + path.string() + " (run '" + producer + "' first)");
    }
}

void require_hash(Stage stage, const FileMeta& meta, const std::string& expected, const fs::path& path) {
    if (meta.config_hash != expected) {
        throw StageError(stage, "config-hash mismatch: " + path.filename().string() + " was produced with " +
                                    (meta.config_hash.empty() ? std::string("<none>") : meta.config_hash) +
                                    ", current config is " + expected);
    }
}

StageOutput run_gen(const RunContext& ctx) {
    StageOutput out;
    const Trajectory traj = build_trajectory(ctx.config);
    for (const auto& w : validate_trajectory(traj, ctx.config.workspace)) out.warnings.push_back(w.message);
    const fs::path dir = ctx.run_dir();
    write_file_atomic(dir / artifact::kConfig, write_config(ctx.config));
    write_file_atomic(dir / artifact::kTrajectory, format_trajectory(traj, meta_for(ctx, traj.dt)));
    out.files = {dir / artifact::kConfig, dir / artifact::kTrajectory};
    return out;
}

StageOutput run_ik(const RunContext& ctx) {
    const fs::path dir = ctx.run_dir();
    const fs::path in_path = dir / artifact::kTrajectory;
    require_upstream(Stage::Ik, in_path, "gen");
    FileMeta meta;
    const Trajectory traj = read_trajectory(in_path, &meta);
    require_hash(Stage::Ik, meta, config_hash(ctx.config), in_path);

    JointTrajectory jt;
    jt.dt = traj.dt;
    jt.q = solve_trajectory_ik(traj, ctx.config);
    for (const auto& s : traj.samples) jt.t.push_back(s.t);
    const fs::path out_path = dir / artifact::kJointTargets;
    write_file_atomic(out_path, format_joint_targets(jt, meta_for(ctx, jt.dt)));
    return {{out_path}, {}};
}

StageOutput run_sim_stage(const RunContext& ctx) {
    const fs::path dir = ctx.run_dir();
    const fs::path in_path = dir / artifact::kJointTargets;
    require_upstream(Stage::Sim, in_path, "ik");
    FileMeta meta;
    const JointTrajectory jt = read_joint_targets(in_path, &meta);
    require_hash(Stage::Sim, meta, config_hash(ctx.config), in_path);
    if (jt.q.empty()) throw StageError(Stage::Sim, "joint target file is empty");

    SimParams params = ctx.config.sim;
    params.dt = jt.dt;
    const SimLog log = run_sim(jt.q, params, ctx.config.actuator, ctx.config.robot);
    const fs::path out_path = dir / artifact::kSimLog;
    write_log(out_path, log, meta_for(ctx, log.dt));
    return {{out_path}, {}};
}

std::vector<std::string> row_of(double t, std::initializer_list<double> values) {
    std::vector<std::string> r{format_number(t)};
    for (double v : values) r.push_back(format_number(v));
    return r;
}

StageOutput run_post(const RunContext& ctx) {
    const fs::path dir = ctx.run_dir();
    const fs::path traj_path = dir / artifact::kTrajectory;
    const fs::path log_path = dir / artifact::kSimLog;
    require_upstream(Stage::Post, traj_path, "gen");
    require_upstream(Stage::Post, log_path, "sim");
    const std::string hash = config_hash(ctx.config);
    FileMeta traj_meta;
    const Trajectory traj = read_trajectory(traj_path, &traj_meta);
    require_hash(Stage::Post, traj_meta, hash, traj_path);
    FileMeta log_meta;
    const SimLog log = read_log(log_path, &log_meta);
    require_hash(Stage::Post, log_meta, hash, log_path);

    const PostResult res = post_process(traj, log, ctx.config);
    const FileMeta meta = meta_for(ctx, traj.dt);
    StageOutput out;

    auto emit = [&](const fs::path& p, const std::string& content) {
        write_file_atomic(p, content);
        out.files.push_back(p);
    };
    FileMeta report_meta = meta;
    report_meta.schema = "motionplat.rmse_report/1";
    emit(dir / artifact::kReport, format_rmse_report(res.pose_rmse, report_meta));
    FileMeta joint_meta = meta;
    joint_meta.schema = "motionplat.joint_rmse/1";
    emit(dir / artifact::kJointRmse, format_joint_rmse(res.joints, joint_meta));

    static const std::array<const char*, 6> kCh{"x", "y", "z", "rx", "ry", "rz"};
    {
        std::vector<std::string> header{"t"};
        for (const char* group : {"target_", "calc_", "calc_vel_", "calc_acc_"}) {
            for (const char* ch : kCh) header.push_back(std::string(group) + ch);
        }
        std::vector<std::vector<std::string>> rows;
        rows.reserve(traj.size());
        for (std::size_t k = 0; k < traj.size(); ++k) {
            std::vector<std::string> r{format_number(traj.samples[k].t)};
            for (const auto& arr : {to_channels(res.target.poses[k]), to_channels(res.calculated.poses[k]),
                                    res.calculated.velocity[k], res.calculated.acceleration[k]}) {
                for (double v : arr) r.push_back(format_number(v));
            }
            rows.push_back(std::move(r));
        }
        FileMeta m = meta;
        m.schema = "motionplat.pose_series/1";
        emit(dir / artifact::kPoseSeries, format_table(m, header, rows));
    }

    const fs::path plot = dir / artifact::kPlotDir;
    for (std::size_t c = 0; c < kCh.size(); ++c) {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(traj.size());
        for (std::size_t k = 0; k < traj.size(); ++k) {
            rows.push_back(row_of(traj.samples[k].t, {to_channels(res.target.poses[k])[c],
                                                      to_channels(res.calculated.poses[k])[c]}));
        }
        FileMeta m = meta;
        m.schema = "motionplat.plot/1";
        emit(plot / (std::string("pose_") + kCh[c] + ".csv"), format_table(m, {"t", "target", "actual"}, rows));
    }
    for (int j = 0; j < kNumJoints; ++j) {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(log.records.size());
        for (const SimRecord& r : log.records) {
            rows.push_back(row_of(r.t, {r.q_target[j], r.q_actual[j], r.current[j]}));
        }
        FileMeta m = meta;
        m.schema = "motionplat.plot/1";
        const std::string name = "joint_" + std::string(kLegNames[static_cast<std::size_t>(j / 3)]) + "_" +
                                 std::string(kJointNames[static_cast<std::size_t>(j % 3)]) + ".csv";
        emit(plot / name, format_table(m, {"t", "target", "actual", "current"}, rows));
    }
    return out;
}

void append(StageOutput& into, StageOutput&& from) {
    into.files.insert(into.files.end(), from.files.begin(), from.files.end());
    into.warnings.insert(into.warnings.end(), from.warnings.begin(), from.warnings.end());
}

}  // namespace

std::string_view to_string(Stage s) {
    switch (s) {
        case Stage::Gen: return "gen";
        case Stage::Ik: return "ik";
        case Stage::Sim: return "sim";
        case Stage::Post: return "post";
        case Stage::All: return "all";
    }
    return "?";
}

Stage parse_stage(std::string_view s) {
    for (Stage st : {Stage::Gen, Stage::Ik, Stage::Sim, Stage::Post, Stage::All}) {
        if (to_string(st) == s) return st;
    }
    throw InvalidArgumentError("unknown stage '" + std::string(s) + "'");
}

fs::path runs_root_from_env() {
    const char* env = std::getenv("MOTIONPLAT_RUNS_DIR");
    return env && *env ? fs::path(env) : fs::path("runs");
}

Trajectory build_trajectory(const Config& c) {
    const double dt = c.dt();
    switch (c.trajectory) {
        case TrajectoryKind::Sine: return gen_sine_sequence(c.sine.blocks(), dt);
        case TrajectoryKind::Arbitrary:
            return gen_arbitrary(c.arbitrary.waypoints, c.arbitrary.segment_times, dt, c.arbitrary.interpolation);
        case TrajectoryKind::Step: return gen_step(c.step.target, c.step.step_time, c.step.total_time, dt);
        case TrajectoryKind::Circular: return gen_circular(c.circular, dt);
    }
    throw InvalidArgumentError("unknown trajectory kind");
}

std::vector<JointVector> solve_trajectory_ik(const Trajectory& traj, const Config& c) {
    std::vector<JointVector> out;
    out.reserve(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) {
        try {
            out.push_back(solve_platform_ik(traj.samples[k].pose, c.robot, c.platform, c.workspace));
        } catch (const Error& e) {
            std::ostringstream os;
            os << "sample " << k << " (t = " << traj.samples[k].t << " s): " << e.what();
            throw StageError(Stage::Ik, os.str());
        }
    }
    return out;
}

PostResult post_process(const Trajectory& target, const SimLog& log, const Config& c) {
    if (target.size() != log.records.size()) {
        throw StageError(Stage::Post, "trajectory has " + std::to_string(target.size()) + " samples but the log has " +
                                          std::to_string(log.records.size()));
    }
    PostResult res;
    PoseSeries tgt;
    tgt.dt = target.dt;
    for (const auto& s : target.samples) tgt.poses.push_back(s.pose);

    PoseSeries raw;
    raw.dt = log.dt;
    std::vector<JointVector> q_target;
    std::vector<JointVector> q_actual;
    for (const SimRecord& r : log.records) {
        raw.poses.push_back(reconstruct_pose(r.q_actual, c.robot, c.platform, c.z_offset_mode));
        q_target.push_back(r.q_target);
        q_actual.push_back(r.q_actual);
    }
    try {
        res.target = differentiate(tgt);
        res.calculated = differentiate(filter_pose_series(raw, c.filter));
        res.pose_rmse = rmse_report(res.target, res.calculated);
        res.joints = joint_rmse(q_target, q_actual);
    } catch (const StageError&) {
        throw;
    } catch (const Error& e) {
        throw StageError(Stage::Post, e.what());
    }
    return res;
}

std::string format_rmse_report(const RmseReport& r, const FileMeta& meta) {
    std::vector<std::vector<std::string>> rows;
    static const std::array<const char*, 3> kAxes{"x", "y", "z"};
    for (std::size_t a = 0; a < 3; ++a) rows.push_back({"translation", kAxes[a], format_number(r.translation_mm[a]), "mm"});
    rows.push_back({"average_translation", "xyz", format_number(r.translation_avg_mm), "mm"});
    for (std::size_t a = 0; a < 3; ++a) rows.push_back({"rotation", kAxes[a], format_number(r.rotation_deg[a]), "deg"});
    rows.push_back({"average_rotation", "xyz", format_number(r.rotation_avg_deg), "deg"});
    return format_table(meta, {"motion_type", "axis", "rmse", "unit"}, rows);
}

std::string format_joint_rmse(const JointRmse& r, const FileMeta& meta) {
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < kNumLegs; ++i) {
        const std::string leg(kLegNames[static_cast<std::size_t>(i)]);
        for (int j = 0; j < kJointsPerLeg; ++j) {
            rows.push_back({leg, std::string(kJointNames[static_cast<std::size_t>(j)]),
                            format_number(r.per_joint_deg[3 * i + j])});
        }
        rows.push_back({leg, "average", format_number(r.leg_avg_deg[i])});
    }
    return format_table(meta, {"leg", "joint", "rmse_deg"}, rows);
}

StageOutput run_stage(Stage stage, const RunContext& ctx) {
    try {
        switch (stage) {
            case Stage::Gen: return run_gen(ctx);
            case Stage::Ik: return run_ik(ctx);
            case Stage::Sim: return run_sim_stage(ctx);
            case Stage::Post: return run_post(ctx);
            case Stage::All: {
                StageOutput out;
                for (Stage s : {Stage::Gen, Stage::Ik, Stage::Sim, Stage::Post}) append(out, run_stage(s, ctx));
                return out;
            }
        }
    } catch (const StageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(stage, e.what());
    }
    throw StageError(stage, "unknown stage");
}

}  // namespace motionplat
