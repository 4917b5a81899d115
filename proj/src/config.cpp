#include "motionplat/config.hpp"

#include "motionplat/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace motionplat {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_number(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) {
        throw InvalidArgumentError("expected a number, got '" + std::string(s) + "'");
    }
    return v;
}

std::vector<double> parse_numbers(std::string_view s) {
    std::vector<double> out;
    for (auto part : split(s, ',')) out.push_back(parse_number(part));
    return out;
}

Vec3 parse_vec3(std::string_view s) {
    const auto v = parse_numbers(s);
    if (v.size() != 3) throw InvalidArgumentError("expected 3 comma-separated numbers");
    return {v[0], v[1], v[2]};
}

PlatformPose parse_pose(std::string_view s) {
    const auto v = parse_numbers(s);
    if (v.size() != 6) throw InvalidArgumentError("expected 6 comma-separated numbers (x, y, z, rx, ry, rz)");
    return from_channels({v[0], v[1], v[2], v[3], v[4], v[5]});
}

bool parse_bool(std::string_view s) {
    s = trim(s);
    if (s == "true") return true;
    if (s == "false") return false;
    throw InvalidArgumentError("expected true or false, got '" + std::string(s) + "'");
}

int parse_int(std::string_view s) {
    s = trim(s);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw InvalidArgumentError("expected an integer, got '" + std::string(s) + "'");
    }
    return v;
}

JointArray parse_gains(std::string_view s) {
    const auto v = parse_numbers(s);
    JointArray out{};
    if (v.size() == 1) {
        out.fill(v[0]);
    } else if (v.size() == 3) {
        for (int j = 0; j < kNumJoints; ++j) out[j] = v[static_cast<std::size_t>(j % 3)];
    } else if (v.size() == static_cast<std::size_t>(kNumJoints)) {
        std::copy(v.begin(), v.end(), out.begin());
    } else {
        throw InvalidArgumentError("expected 1, 3 or 12 gains");
    }
    return out;
}

std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fmt(const Vec3& v) { return fmt(v.x()) + ", " + fmt(v.y()) + ", " + fmt(v.z()); }

std::string fmt(const PlatformPose& p) {
    std::string s;
    const auto c = to_channels(p);
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + fmt(c[i]);
    return s;
}

std::string fmt(bool b) { return b ? "true" : "false"; }

std::string fmt_gains(const JointArray& g) {
    const bool uniform = std::all_of(g.begin(), g.end(), [&](double v) { return v == g[0]; });
    if (uniform) return fmt(g[0]);
    bool per_type = true;
    for (int j = 3; j < kNumJoints; ++j) per_type = per_type && g[j] == g[j % 3];
    const int n = per_type ? 3 : kNumJoints;
    std::string s;
    for (int j = 0; j < n; ++j) s += (j ? ", " : "") + fmt(g[j]);
    return s;
}

std::string_view to_string(Side s) { return s == Side::Left ? "left" : "right"; }
std::string_view to_string(KneeBend b) { return b == KneeBend::Inward ? "inward" : "outward"; }
std::string_view to_string(Interpolation i) { return i == Interpolation::Linear ? "linear" : "cosine"; }
std::string_view to_string(CircleDirection d) { return d == CircleDirection::Clockwise ? "cw" : "ccw"; }
std::string_view to_string(CircularRotationMode m) {
    return m == CircularRotationMode::Oscillate ? "oscillate" : "spin";
}
std::string_view to_string(ZOffsetMode m) { return m == ZOffsetMode::World ? "world" : "platform_normal"; }

template <typename E>
E parse_enum(std::string_view s, std::initializer_list<E> options) {
    s = trim(s);
    std::string allowed;
    for (E e : options) {
        if (to_string(e) == s) return e;
        allowed += (allowed.empty() ? "" : ", ") + std::string(to_string(e));
    }
    throw InvalidArgumentError("expected one of {" + allowed + "}, got '" + std::string(s) + "'");
}

using Setter = std::function<void(std::string_view)>;
using SectionTable = std::map<std::string, std::map<std::string, Setter>, std::less<>>;

SectionTable build_table(Config& c) {
    SectionTable t;
    for (int i = 0; i < kNumLegs; ++i) {
        LegGeometry& leg = c.robot.legs[static_cast<std::size_t>(i)];
        auto& s = t["leg." + std::string(kLegNames[static_cast<std::size_t>(i)])];
        s["hip_mount"] = [&leg](std::string_view v) { leg.hip_mount = parse_vec3(v); };
        s["hip_offset_y"] = [&leg](std::string_view v) { leg.hip_offset_y = parse_number(v); };
        s["l_upper"] = [&leg](std::string_view v) { leg.l_upper = parse_number(v); };
        s["l_lower"] = [&leg](std::string_view v) { leg.l_lower = parse_number(v); };
        s["side"] = [&leg](std::string_view v) { leg.side = parse_enum(v, {Side::Left, Side::Right}); };
    }
    {
        auto& s = t["robot"];
        s["front_bend"] = [&c](std::string_view v) {
            c.robot.front_bend = parse_enum(v, {KneeBend::Inward, KneeBend::Outward});
        };
        s["back_bend"] = [&c](std::string_view v) {
            c.robot.back_bend = parse_enum(v, {KneeBend::Inward, KneeBend::Outward});
        };
        s["joint_lower_deg"] = [&c](std::string_view v) { c.robot.joint_limits.lower_deg = parse_number(v); };
        s["joint_upper_deg"] = [&c](std::string_view v) { c.robot.joint_limits.upper_deg = parse_number(v); };
    }
    {
        auto& s = t["platform"];
        for (int i = 0; i < kNumLegs; ++i) {
            s["corner_" + std::string(kLegNames[static_cast<std::size_t>(i)])] = [&c, i](std::string_view v) {
                c.platform.corner_offsets[static_cast<std::size_t>(i)] = parse_vec3(v);
            };
        }
        s["z_offset"] = [&c](std::string_view v) { c.platform.z_offset = parse_number(v); };
        s["home_center"] = [&c](std::string_view v) { c.platform.home_center = parse_vec3(v); };
    }
    {
        auto& s = t["workspace"];
        s["x_max"] = [&c](std::string_view v) { c.workspace.x_max = parse_number(v); };
        s["y_max"] = [&c](std::string_view v) { c.workspace.y_max = parse_number(v); };
        s["z_max"] = [&c](std::string_view v) { c.workspace.z_max = parse_number(v); };
        s["rot_max"] = [&c](std::string_view v) { c.workspace.rot_max = parse_number(v); };
        s["ball_pivot_max"] = [&c](std::string_view v) { c.workspace.ball_pivot_max = parse_number(v); };
    }
    {
        auto& s = t["actuator"];
        s["tau_max"] = [&c](std::string_view v) { c.actuator.tau_max = parse_number(v); };
        s["gear_ratio"] = [&c](std::string_view v) { c.actuator.gear_ratio = parse_number(v); };
        s["kt_motor"] = [&c](std::string_view v) { c.actuator.kt_motor = parse_number(v); };
        s["i_max"] = [&c](std::string_view v) { c.actuator.i_max = parse_number(v); };
        s["reflected_inertia"] = [&c](std::string_view v) { c.actuator.reflected_inertia = parse_number(v); };
    }
    {
        auto& s = t["sim"];
        s["kp"] = [&c](std::string_view v) { c.sim.kp = parse_gains(v); };
        s["kd"] = [&c](std::string_view v) { c.sim.kd = parse_gains(v); };
        s["gravity"] = [&c](std::string_view v) { c.sim.gravity = parse_number(v); };
        s["payload_mass"] = [&c](std::string_view v) { c.sim.payload_mass = parse_number(v); };
        s["platform_mass"] = [&c](std::string_view v) { c.sim.platform_mass = parse_number(v); };
        s["gravity_compensation"] = [&c](std::string_view v) { c.sim.gravity_compensation = parse_bool(v); };
    }
    {
        auto& s = t["filter"];
        s["cutoff"] = [&c](std::string_view v) { c.filter.cutoff = parse_number(v); };
        s["order"] = [&c](std::string_view v) { c.filter.order = parse_int(v); };
        s["zero_phase"] = [&c](std::string_view v) { c.filter.zero_phase = parse_bool(v); };
    }
    {
        auto& s = t["post"];
        s["z_offset_mode"] = [&c](std::string_view v) {
            c.z_offset_mode = parse_enum(v, {ZOffsetMode::World, ZOffsetMode::PlatformNormal});
        };
    }
    {
        auto& s = t["trajectory"];
        s["type"] = [&c](std::string_view v) { c.trajectory = parse_trajectory_kind(trim(v)); };
        s["profile"] = [&c](std::string_view v) { c.profile = parse_rate_profile(trim(v)); };
        s["dt"] = [&c](std::string_view v) { c.dt_override = parse_number(v); };
    }
    {
        auto& s = t["sine"];
        s["axes"] = [&c](std::string_view v) {
            c.sine.axes.clear();
            for (auto a : split(v, ',')) c.sine.axes.push_back(parse_axis(a));
        };
        s["run_time"] = [&c](std::string_view v) { c.sine.run_time = parse_number(v); };
        s["wait_time"] = [&c](std::string_view v) { c.sine.wait_time = parse_number(v); };
        s["frequency"] = [&c](std::string_view v) { c.sine.frequency = parse_number(v); };
        s["amplitude_translation"] = [&c](std::string_view v) { c.sine.amplitude_translation = parse_number(v); };
        s["amplitude_rotation"] = [&c](std::string_view v) { c.sine.amplitude_rotation = parse_number(v); };
        s["offsets"] = [&c](std::string_view v) { c.sine.offsets = parse_vec3(v); };
    }
    {
        auto& s = t["arbitrary"];
        s["waypoints"] = [&c](std::string_view v) {
            c.arbitrary.waypoints.clear();
            for (auto p : split(v, ';')) c.arbitrary.waypoints.push_back(parse_pose(p));
        };
        s["segment_times"] = [&c](std::string_view v) {
            c.arbitrary.segment_times = trim(v).empty() ? std::vector<double>{} : parse_numbers(v);
        };
        s["interpolation"] = [&c](std::string_view v) {
            c.arbitrary.interpolation = parse_enum(v, {Interpolation::Linear, Interpolation::CosineBlend});
        };
    }
    {
        auto& s = t["step"];
        s["target"] = [&c](std::string_view v) { c.step.target = parse_pose(v); };
        s["step_time"] = [&c](std::string_view v) { c.step.step_time = parse_number(v); };
        s["total_time"] = [&c](std::string_view v) { c.step.total_time = parse_number(v); };
    }
    {
        auto& s = t["circular"];
        s["radius"] = [&c](std::string_view v) { c.circular.radius = parse_number(v); };
        s["rot_angle"] = [&c](std::string_view v) { c.circular.rot_angle = parse_number(v); };
        s["rounds"] = [&c](std::string_view v) { c.circular.rounds = parse_int(v); };
        s["frequency"] = [&c](std::string_view v) { c.circular.frequency = parse_number(v); };
        s["direction"] = [&c](std::string_view v) {
            c.circular.direction = parse_enum(v, {CircleDirection::Clockwise, CircleDirection::CounterClockwise});
        };
        s["translation"] = [&c](std::string_view v) { c.circular.translation_enabled = parse_bool(v); };
        s["rotation"] = [&c](std::string_view v) { c.circular.rotation_enabled = parse_bool(v); };
        s["rotation_mode"] = [&c](std::string_view v) {
            c.circular.rotation_mode = parse_enum(v, {CircularRotationMode::Oscillate, CircularRotationMode::Spin});
        };
    }
    return t;
}

const std::map<std::string, std::vector<std::string>, std::less<>>& required_keys() {
    static const std::map<std::string, std::vector<std::string>, std::less<>> req = {
        {"leg.FL", {"hip_mount", "l_upper", "l_lower"}},
        {"leg.FR", {"hip_mount", "l_upper", "l_lower"}},
        {"leg.BL", {"hip_mount", "l_upper", "l_lower"}},
        {"leg.BR", {"hip_mount", "l_upper", "l_lower"}},
        {"platform", {"corner_FL", "corner_FR", "corner_BL", "corner_BR", "z_offset", "home_center"}},
    };
    return req;
}

}  // namespace

std::string_view to_string(TrajectoryKind k) {
    switch (k) {
        case TrajectoryKind::Sine: return "sine";
        case TrajectoryKind::Arbitrary: return "arbitrary";
        case TrajectoryKind::Step: return "step";
        case TrajectoryKind::Circular: return "circular";
    }
    return "?";
}

TrajectoryKind parse_trajectory_kind(std::string_view s) {
    return parse_enum(s, {TrajectoryKind::Sine, TrajectoryKind::Arbitrary, TrajectoryKind::Step,
                          TrajectoryKind::Circular});
}

std::string_view to_string(RateProfile p) { return p == RateProfile::Sim ? "sim" : "hw"; }

RateProfile parse_rate_profile(std::string_view s) { return parse_enum(s, {RateProfile::Sim, RateProfile::Hardware}); }

std::vector<SineParams> SineConfig::blocks() const {
    std::vector<SineParams> out;
    for (PoseAxis a : axes) {
        SineParams p;
        p.axis = a;
        p.run_time = run_time;
        p.wait_time = wait_time;
        p.frequency = frequency;
        p.amplitude = is_rotation(a) ? amplitude_rotation : amplitude_translation;
        p.offsets = offsets;
        out.push_back(p);
    }
    return out;
}

Config::Config() {
    PlatformPose a;
    a.position = Vec3(10.0, 0.0, 0.0);
    PlatformPose b;
    b.position = Vec3(10.0, 10.0, 0.0);
    b.orientation.rz = 5.0;
    arbitrary.waypoints = {PlatformPose::home(), a, b, PlatformPose::home()};
    arbitrary.segment_times = {1.0, 1.0, 1.0};
    step.target.position = Vec3(10.0, 0.0, 0.0);
}

double Config::dt() const {
    if (dt_override) return *dt_override;
    return profile == RateProfile::Sim ? 1.0 / kSimRateHz : 1.0 / kHardwareRateHz;
}

void validate(const Config& c) {
    for (int i = 0; i < kNumLegs; ++i) {
        validate(c.robot.legs[static_cast<std::size_t>(i)], "leg." + std::string(kLegNames[static_cast<std::size_t>(i)]));
    }
    if (!(c.robot.joint_limits.lower_deg < c.robot.joint_limits.upper_deg)) {
        throw InvalidArgumentError("robot.joint_lower_deg: must be below joint_upper_deg");
    }
    validate(c.platform);
    validate(c.workspace);
    validate(c.actuator);
    validate(c.sim);
    const double dt = c.dt();
    if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgumentError("trajectory.dt: must be > 0");
    validate(c.filter, 1.0 / dt);
    if (c.sine.axes.empty()) throw InvalidArgumentError("sine.axes: need at least one axis");
    if (!(c.sine.frequency > 0.0)) throw InvalidArgumentError("sine.frequency: must be > 0");
    if (!(c.sine.run_time >= 0.0)) throw InvalidArgumentError("sine.run_time: must be >= 0");
    if (!(c.sine.wait_time >= 0.0)) throw InvalidArgumentError("sine.wait_time: must be >= 0");
    if (c.arbitrary.waypoints.empty()) throw InvalidArgumentError("arbitrary.waypoints: need at least one waypoint");
    if (c.arbitrary.segment_times.size() + 1 != c.arbitrary.waypoints.size()) {
        throw InvalidArgumentError("arbitrary.segment_times: need one fewer entry than waypoints");
    }
    for (double s : c.arbitrary.segment_times) {
        if (!(s > 0.0)) throw InvalidArgumentError("arbitrary.segment_times: entries must be > 0");
    }
    if (!(c.step.step_time >= 0.0 && c.step.step_time <= c.step.total_time)) {
        throw InvalidArgumentError("step.step_time: need 0 <= step_time <= total_time");
    }
    if (!(c.circular.radius >= 0.0)) throw InvalidArgumentError("circular.radius: must be >= 0");
    if (c.circular.rounds < 1) throw InvalidArgumentError("circular.rounds: must be >= 1");
    if (!(c.circular.frequency > 0.0)) throw InvalidArgumentError("circular.frequency: must be > 0");
}

Config parse_config(std::string_view text) {
    Config c;
    SectionTable table = build_table(c);
    std::map<std::string, std::set<std::string>, std::less<>> seen;

    std::string section;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError("unterminated section header", line_no);
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (!table.contains(section)) throw ParseError("unknown section [" + section + "]", line_no);
            if (seen.contains(section)) throw ParseError("duplicate section [" + section + "]", line_no);
            seen[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no);
        if (section.empty()) throw ParseError("key outside of any section", line_no);
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        auto& keys = table.find(section)->second;
        const auto it = keys.find(key);
        if (it == keys.end()) throw ParseError("unknown key '" + section + "." + key + "'", line_no);
        if (!seen[section].insert(key).second) {
            throw ParseError("duplicate key '" + section + "." + key + "'", line_no);
        }
        try {
            it->second(value);
        } catch (const InvalidArgumentError& e) {
            throw ParseError(section + "." + key + ": " + e.what(), line_no);
        }
    }

    for (const auto& [sec, keys] : required_keys()) {
        const auto it = seen.find(sec);
        if (it == seen.end()) throw ParseError("missing required section [" + sec + "]", 0);
        for (const auto& k : keys) {
            if (!it->second.contains(k)) throw ParseError("missing required key '" + sec + "." + k + "'", 0);
        }
    }
    // Side follows the mount unless given explicitly.
    for (int i = 0; i < kNumLegs; ++i) {
        const std::string sec = "leg." + std::string(kLegNames[static_cast<std::size_t>(i)]);
        if (!seen[sec].contains("side")) {
            auto& leg = c.robot.legs[static_cast<std::size_t>(i)];
            leg.side = leg.hip_mount.y() >= 0.0 ? Side::Left : Side::Right;
        }
    }
    validate(c);
    return c;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string write_config(const Config& c) {
    std::ostringstream os;
    for (int i = 0; i < kNumLegs; ++i) {
        const LegGeometry& leg = c.robot.legs[static_cast<std::size_t>(i)];
        os << "[leg." << kLegNames[static_cast<std::size_t>(i)] << "]\n"
           << "hip_mount = " << fmt(leg.hip_mount) << "\n"
           << "hip_offset_y = " << fmt(leg.hip_offset_y) << "\n"
           << "l_upper = " << fmt(leg.l_upper) << "\n"
           << "l_lower = " << fmt(leg.l_lower) << "\n"
           << "side = " << to_string(leg.side) << "\n\n";
    }
    os << "[robot]\n"
       << "front_bend = " << to_string(c.robot.front_bend) << "\n"
       << "back_bend = " << to_string(c.robot.back_bend) << "\n"
       << "joint_lower_deg = " << fmt(c.robot.joint_limits.lower_deg) << "\n"
       << "joint_upper_deg = " << fmt(c.robot.joint_limits.upper_deg) << "\n\n";
    os << "[platform]\n";
    for (int i = 0; i < kNumLegs; ++i) {
        os << "corner_" << kLegNames[static_cast<std::size_t>(i)] << " = "
           << fmt(c.platform.corner_offsets[static_cast<std::size_t>(i)]) << "\n";
    }
    os << "z_offset = " << fmt(c.platform.z_offset) << "\n"
       << "home_center = " << fmt(c.platform.home_center) << "\n\n";
    os << "[workspace]\n"
       << "x_max = " << fmt(c.workspace.x_max) << "\n"
       << "y_max = " << fmt(c.workspace.y_max) << "\n"
       << "z_max = " << fmt(c.workspace.z_max) << "\n"
       << "rot_max = " << fmt(c.workspace.rot_max) << "\n"
       << "ball_pivot_max = " << fmt(c.workspace.ball_pivot_max) << "\n\n";
    os << "[actuator]\n"
       << "tau_max = " << fmt(c.actuator.tau_max) << "\n"
       << "gear_ratio = " << fmt(c.actuator.gear_ratio) << "\n"
       << "kt_motor = " << fmt(c.actuator.kt_motor) << "\n"
       << "i_max = " << fmt(c.actuator.i_max) << "\n"
       << "reflected_inertia = " << fmt(c.actuator.reflected_inertia) << "\n\n";
    os << "[sim]\n"
       << "kp = " << fmt_gains(c.sim.kp) << "\n"
       << "kd = " << fmt_gains(c.sim.kd) << "\n"
       << "gravity = " << fmt(c.sim.gravity) << "\n"
       << "payload_mass = " << fmt(c.sim.payload_mass) << "\n"
       << "platform_mass = " << fmt(c.sim.platform_mass) << "\n"
       << "gravity_compensation = " << fmt(c.sim.gravity_compensation) << "\n\n";
    os << "[filter]\n"
       << "cutoff = " << fmt(c.filter.cutoff) << "\n"
       << "order = " << c.filter.order << "\n"
       << "zero_phase = " << fmt(c.filter.zero_phase) << "\n\n";
    os << "[post]\n"
       << "z_offset_mode = " << to_string(c.z_offset_mode) << "\n\n";
    os << "[trajectory]\n"
       << "type = " << to_string(c.trajectory) << "\n"
       << "profile = " << to_string(c.profile) << "\n";
    if (c.dt_override) os << "dt = " << fmt(*c.dt_override) << "\n";
    os << "\n[sine]\naxes = ";
    for (std::size_t i = 0; i < c.sine.axes.size(); ++i) os << (i ? ", " : "") << axis_name(c.sine.axes[i]);
    os << "\nrun_time = " << fmt(c.sine.run_time) << "\n"
       << "wait_time = " << fmt(c.sine.wait_time) << "\n"
       << "frequency = " << fmt(c.sine.frequency) << "\n"
       << "amplitude_translation = " << fmt(c.sine.amplitude_translation) << "\n"
       << "amplitude_rotation = " << fmt(c.sine.amplitude_rotation) << "\n"
       << "offsets = " << fmt(c.sine.offsets) << "\n\n";
    os << "[arbitrary]\nwaypoints = ";
    for (std::size_t i = 0; i < c.arbitrary.waypoints.size(); ++i) {
        os << (i ? "; " : "") << fmt(c.arbitrary.waypoints[i]);
    }
    os << "\nsegment_times = ";
    for (std::size_t i = 0; i < c.arbitrary.segment_times.size(); ++i) {
        os << (i ? ", " : "") << fmt(c.arbitrary.segment_times[i]);
    }
    os << "\ninterpolation = " << to_string(c.arbitrary.interpolation) << "\n\n";
    os << "[step]\n"
       << "target = " << fmt(c.step.target) << "\n"
       << "step_time = " << fmt(c.step.step_time) << "\n"
       << "total_time = " << fmt(c.step.total_time) << "\n\n";
    os << "[circular]\n"
       << "radius = " << fmt(c.circular.radius) << "\n"
       << "rot_angle = " << fmt(c.circular.rot_angle) << "\n"
       << "rounds = " << c.circular.rounds << "\n"
       << "frequency = " << fmt(c.circular.frequency) << "\n"
       << "direction = " << to_string(c.circular.direction) << "\n"
       << "translation = " << fmt(c.circular.translation_enabled) << "\n"
       << "rotation = " << fmt(c.circular.rotation_enabled) << "\n"
       << "rotation_mode = " << to_string(c.circular.rotation_mode) << "\n";
    return os.str();
}

std::string config_hash(const Config& c) {
    const std::string text = write_config(c);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace motionplat
