// motionplat: run the gen -> ik -> sim -> post pipeline over a run directory.
//
//   motionplat all --config rig.ini --run-id sine01
//   motionplat post --run-id sine01
//
// Mid-pipeline stages without --config reuse the run's config.ini snapshot.

#include "motionplat/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

namespace mp = motionplat;

namespace {

struct Options {
    std::string config_path;
    std::string run_id = "default";
    std::optional<std::string> traj;
    std::optional<double> dt;
    std::optional<std::string> profile;
};

mp::Config resolve_config(mp::Stage stage, const Options& opt, const std::filesystem::path& run_dir) {
    mp::Config c;
    const auto snapshot = run_dir / mp::artifact::kConfig;
    if (!opt.config_path.empty()) {
        c = mp::load_config(opt.config_path);
    } else if (stage != mp::Stage::Gen && stage != mp::Stage::All && std::filesystem::exists(snapshot)) {
        c = mp::load_config(snapshot);
    }
    if (opt.traj) c.trajectory = mp::parse_trajectory_kind(*opt.traj);
    if (opt.profile) c.profile = mp::parse_rate_profile(*opt.profile);
    if (opt.dt) c.dt_override = *opt.dt;
    mp::validate(c);
    return c;
}

int run(mp::Stage stage, const Options& opt) {
    mp::RunContext ctx;
    ctx.runs_root = mp::runs_root_from_env();
    ctx.run_id = opt.run_id;
    ctx.config = resolve_config(stage, opt, ctx.run_dir());
    const mp::StageOutput out = mp::run_stage(stage, ctx);
    for (const auto& w : out.warnings) std::cerr << "warning: " << w << '\n';
    for (const auto& f : out.files) std::cout << f.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Platform motion pipeline: trajectory generation, inverse kinematics, simulation, post-processing"};
    app.require_subcommand(1);

    Options opt;
    std::optional<mp::Stage> chosen;
    const std::vector<std::pair<mp::Stage, const char*>> stages{
        {mp::Stage::Gen, "Generate the platform trajectory"},
        {mp::Stage::Ik, "Solve joint targets for every trajectory sample"},
        {mp::Stage::Sim, "Run the joint-space simulator on the joint targets"},
        {mp::Stage::Post, "Reconstruct, filter and score the simulated motion"},
        {mp::Stage::All, "Run gen, ik, sim and post in order"},
    };
    for (const auto& [stage, help] : stages) {
        CLI::App* sub = app.add_subcommand(std::string(mp::to_string(stage)), help);
        sub->add_option("--config", opt.config_path, "Configuration file")->check(CLI::ExistingFile);
        sub->add_option("--run-id", opt.run_id, "Run directory name under the runs root")->capture_default_str();
        sub->add_option("--traj", opt.traj, "Trajectory type")
            ->check(CLI::IsMember({"sine", "arbitrary", "step", "circular"}));
        sub->add_option("--dt", opt.dt, "Sample period in seconds (overrides the profile)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--profile", opt.profile, "Rate profile: sim (240 Hz) or hw (1000 Hz)")
            ->check(CLI::IsMember({"sim", "hw"}));
        sub->callback([&chosen, s = stage] { chosen = s; });
    }
    app.footer("The runs root defaults to ./runs and can be moved with MOTIONPLAT_RUNS_DIR.");

    CLI11_PARSE(app, argc, argv);
    try {
        return run(*chosen, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
