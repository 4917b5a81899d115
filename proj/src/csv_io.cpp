#include "motionplat/csv_io.hpp"

#include "motionplat/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace motionplat {

namespace {

std::string shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(',', start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string meta_block(const FileMeta& meta) {
    std::string s;
    s += "# schema: " + meta.schema + "\n";
    s += "# run_id: " + meta.run_id + "\n";
    s += "# config_hash: " + meta.config_hash + "\n";
    s += "# dt: " + shortest(meta.dt) + "\n";
    return s;
}

std::string join(const std::vector<std::string>& cols) {
    std::string s;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) s += ',';
        s += cols[i];
    }
    return s;
}

struct Table {
    FileMeta meta;
    std::vector<std::vector<double>> rows;
};

Table read_table(std::istream& in, std::string_view schema, const std::vector<std::string>& header) {
    Table table;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = trim(line);
        if (sv.empty()) continue;
        if (sv.front() == '#') {
            if (have_header) throw ParseError("metadata line after the header row", line_no);
            sv.remove_prefix(1);
            const auto colon = sv.find(':');
            if (colon == std::string_view::npos) continue;
            const std::string_view key = trim(sv.substr(0, colon));
            const std::string_view value = trim(sv.substr(colon + 1));
            if (key == "schema") table.meta.schema = value;
            else if (key == "run_id") table.meta.run_id = value;
            else if (key == "config_hash") table.meta.config_hash = value;
            else if (key == "dt") {
                const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), table.meta.dt);
                if (ec != std::errc() || ptr != value.data() + value.size()) {
                    throw ParseError("malformed dt '" + std::string(value) + "'", line_no);
                }
            }
            continue;
        }
        const auto cells = split_commas(sv);
        if (!have_header) {
            if (!table.meta.schema.empty() && table.meta.schema != schema) {
                throw ParseError("schema mismatch: expected " + std::string(schema) + ", found " + table.meta.schema,
                                 line_no);
            }
            bool match = cells.size() == header.size();
            for (std::size_t i = 0; match && i < cells.size(); ++i) match = cells[i] == header[i];
            if (!match) {
                throw ParseError("header mismatch: expected " + std::to_string(header.size()) + " columns starting '" +
                                     header.front() + "', found " + std::to_string(cells.size()),
                                 line_no);
            }
            have_header = true;
            continue;
        }
        if (cells.size() != header.size()) {
            throw ParseError("row " + std::to_string(table.rows.size()) + ": expected " +
                                 std::to_string(header.size()) + " fields, found " + std::to_string(cells.size()),
                             line_no);
        }
        std::vector<double> row(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const std::string_view c = cells[i];
            const auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), row[i]);
            if (c.empty() || ec != std::errc() || ptr != c.data() + c.size()) {
                throw ParseError("row " + std::to_string(table.rows.size()) + ": column '" + header[i] +
                                     "' is not a number ('" + std::string(c) + "')",
                                 line_no);
            }
        }
        table.rows.push_back(std::move(row));
    }
    if (!have_header) throw ParseError("missing header row", line_no);
    return table;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    return in;
}

std::vector<std::string> joint_columns(const std::string& prefix) {
    std::vector<std::string> out;
    for (int j = 0; j < kNumJoints; ++j) out.push_back(prefix + std::to_string(j));
    return out;
}

const std::vector<std::string>& trajectory_columns() {
    static const std::vector<std::string> cols{"t", "x", "y", "z", "rx", "ry", "rz"};
    return cols;
}

std::vector<std::string> joint_target_columns() {
    std::vector<std::string> cols{"t"};
    const auto q = joint_columns("q_");
    cols.insert(cols.end(), q.begin(), q.end());
    return cols;
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw Error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

std::vector<std::string> sim_log_columns() {
    std::vector<std::string> cols{"t"};
    for (const char* prefix : {"q_target_", "q_actual_", "qdot_", "tau_", "current_"}) {
        const auto c = joint_columns(prefix);
        cols.insert(cols.end(), c.begin(), c.end());
    }
    return cols;
}

std::string format_table(const FileMeta& meta, const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::string s = meta_block(meta);
    s += join(header) + "\n";
    for (const auto& r : rows) s += join(r) + "\n";
    return s;
}

std::string format_sim_log(const SimLog& log, const FileMeta& meta) {
    FileMeta m = meta;
    m.schema = std::string(kSimLogSchema);
    m.dt = log.dt;
    std::string s = meta_block(m);
    s += join(sim_log_columns()) + "\n";
    for (const SimRecord& r : log.records) {
        s += format_number(r.t);
        auto put = [&s](const auto& arr) {
            for (int j = 0; j < kNumJoints; ++j) {
                s += ',';
                s += format_number(arr[j]);
            }
        };
        put(r.q_target);
        put(r.q_actual);
        put(r.qdot);
        put(r.tau);
        put(r.current);
        s += '\n';
    }
    return s;
}

SimLog parse_sim_log(std::istream& in, FileMeta* meta) {
    const Table table = read_table(in, kSimLogSchema, sim_log_columns());
    SimLog log;
    log.dt = table.meta.dt;
    log.records.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        SimRecord r;
        r.t = row[0];
        for (int j = 0; j < kNumJoints; ++j) {
            r.q_target[j] = row[1 + j];
            r.q_actual[j] = row[1 + kNumJoints + j];
            r.qdot[j] = row[1 + 2 * kNumJoints + j];
            r.tau[j] = row[1 + 3 * kNumJoints + j];
            r.current[j] = row[1 + 4 * kNumJoints + j];
        }
        log.records.push_back(r);
    }
    if (meta) *meta = table.meta;
    return log;
}

void write_log(const std::filesystem::path& path, const SimLog& log, const FileMeta& meta) {
    write_file_atomic(path, format_sim_log(log, meta));
}

SimLog read_log(const std::filesystem::path& path, FileMeta* meta) {
    auto in = open_or_throw(path);
    return parse_sim_log(in, meta);
}

std::string format_trajectory(const Trajectory& traj, const FileMeta& meta) {
    FileMeta m = meta;
    m.schema = std::string(kTrajectorySchema);
    m.dt = traj.dt;
    std::string s = meta_block(m);
    s += join(trajectory_columns()) + "\n";
    for (const TrajectorySample& smp : traj.samples) {
        s += format_number(smp.t);
        const PlatformPose& p = smp.pose;
        for (double v : {p.position.x(), p.position.y(), p.position.z(), p.orientation.rx, p.orientation.ry,
                         p.orientation.rz}) {
            s += ',';
            s += format_number(v);
        }
        s += '\n';
    }
    return s;
}

Trajectory parse_trajectory(std::istream& in, FileMeta* meta) {
    const Table table = read_table(in, kTrajectorySchema, trajectory_columns());
    Trajectory traj;
    traj.dt = table.meta.dt;
    for (const auto& row : table.rows) {
        TrajectorySample s;
        s.t = row[0];
        s.pose.position = Vec3(row[1], row[2], row[3]);
        s.pose.orientation = {row[4], row[5], row[6]};
        traj.samples.push_back(s);
    }
    if (meta) *meta = table.meta;
    return traj;
}

Trajectory read_trajectory(const std::filesystem::path& path, FileMeta* meta) {
    auto in = open_or_throw(path);
    return parse_trajectory(in, meta);
}

std::string format_joint_targets(const JointTrajectory& jt, const FileMeta& meta) {
    FileMeta m = meta;
    m.schema = std::string(kJointTargetSchema);
    m.dt = jt.dt;
    std::string s = meta_block(m);
    s += join(joint_target_columns()) + "\n";
    for (std::size_t k = 0; k < jt.q.size(); ++k) {
        s += format_number(jt.t[k]);
        for (int j = 0; j < kNumJoints; ++j) {
            s += ',';
            s += format_number(jt.q[k][j]);
        }
        s += '\n';
    }
    return s;
}

JointTrajectory parse_joint_targets(std::istream& in, FileMeta* meta) {
    const Table table = read_table(in, kJointTargetSchema, joint_target_columns());
    JointTrajectory jt;
    jt.dt = table.meta.dt;
    for (const auto& row : table.rows) {
        jt.t.push_back(row[0]);
        JointVector q;
        for (int j = 0; j < kNumJoints; ++j) q[j] = row[1 + j];
        jt.q.push_back(q);
    }
    if (meta) *meta = table.meta;
    return jt;
}

JointTrajectory read_joint_targets(const std::filesystem::path& path, FileMeta* meta) {
    auto in = open_or_throw(path);
    return parse_joint_targets(in, meta);
}

}  // namespace motionplat
