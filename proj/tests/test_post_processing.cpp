#include "motionplat/errors.hpp"
#include "motionplat/post_processing.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace motionplat;
using namespace motionplat::test;

namespace {

const Robot kRobot = default_robot();
const PlatformGeometry kPlatform = default_platform();

PoseSeries series_from(const std::vector<PoseChannels>& chans, double dt) {
    PoseSeries s;
    s.dt = dt;
    for (const auto& c : chans) s.poses.push_back(from_channels(c));
    return s;
}

double orientation_error_deg(const EulerAngles& a, const EulerAngles& b) {
    return rad2deg(euler_to_rotation(a).angle_to(euler_to_rotation(b)));
}

}  // namespace

TEST_SUITE("post-processing") {

TEST_CASE("reconstruct_pose examples") {
    SUBCASE("home configuration") {
        const JointVector q = solve_platform_ik(PlatformPose::home(), kRobot, kPlatform);
        const PlatformPose p = reconstruct_pose(q, kRobot, kPlatform);
        CHECK(p.position.norm() < 1e-9);
        CHECK(std::abs(p.orientation.rx) + std::abs(p.orientation.ry) + std::abs(p.orientation.rz) < 1e-9);
    }
    SUBCASE("pure translation (10, -5, 8)") {
        PlatformPose target;
        target.position = {10, -5, 8};
        const PlatformPose p = reconstruct_pose(solve_platform_ik(target, kRobot, kPlatform), kRobot, kPlatform);
        CHECK((p.position - target.position).norm() < 1e-6);
    }
    SUBCASE("10 deg yaw") {
        PlatformPose target;
        target.orientation.rz = 10;
        const JointVector q = solve_platform_ik(target, kRobot, kPlatform);
        const PlatformPose world = reconstruct_pose(q, kRobot, kPlatform, ZOffsetMode::World);
        CHECK(std::abs(world.orientation.rz - 10) < 0.01);
        // Yaw keeps the normal vertical, so both offset modes agree.
        CHECK((world.position - target.position).norm() < 1e-6);
    }
    SUBCASE("tilt: world offset is approximate, normal offset exact") {
        PlatformPose target;
        target.orientation.rx = 8;
        const JointVector q = solve_platform_ik(target, kRobot, kPlatform);
        const PlatformPose world = reconstruct_pose(q, kRobot, kPlatform, ZOffsetMode::World);
        const PlatformPose normal = reconstruct_pose(q, kRobot, kPlatform, ZOffsetMode::PlatformNormal);
        const double tilt = deg2rad(8);
        const double bound = kPlatform.z_offset * (1 - std::cos(tilt)) + kPlatform.z_offset * std::sin(tilt);
        const double world_err = (world.position - target.position).norm();
        CHECK(world_err > 1e-3);
        CHECK(world_err <= bound + 1e-9);
        CHECK((normal.position - target.position).norm() < 1e-6);
        CHECK(orientation_error_deg(normal.orientation, target.orientation) < 0.01);
    }
    SUBCASE("collapsed corner set") {
        Robot stacked = kRobot;
        for (auto& leg : stacked.legs) leg.hip_mount = kRobot.legs[0].hip_mount;
        CHECK_THROWS_AS(reconstruct_pose(JointVector{}, stacked, kPlatform), DegenerateInputError);
    }
}

TEST_CASE("reconstruct_pose inverts solve_platform_ik (property)") {
    std::mt19937_64 rng(31);
    WorkspaceLimits box;
    box.rot_max = 15;
    double worst_t = 0.0, worst_pos = 0.0, worst_rot = 0.0;
    for (int k = 0; k < 200; ++k) {
        const auto tr = sample_reachable_pose(rng, kRobot, kPlatform, box, false);
        REQUIRE(tr.has_value());
        const PlatformPose p = reconstruct_pose(solve_platform_ik(*tr, kRobot, kPlatform), kRobot, kPlatform);
        worst_t = std::max(worst_t, (p.position - tr->position).norm());

        const auto full = sample_reachable_pose(rng, kRobot, kPlatform, box, true);
        REQUIRE(full.has_value());
        const JointVector q = solve_platform_ik(*full, kRobot, kPlatform);
        const PlatformPose r = reconstruct_pose(q, kRobot, kPlatform, ZOffsetMode::PlatformNormal);
        worst_pos = std::max(worst_pos, (r.position - full->position).norm());
        worst_rot = std::max(worst_rot, orientation_error_deg(r.orientation, full->orientation));
    }
    CHECK(worst_t < 1e-6);
    CHECK(worst_pos < 1e-6);
    CHECK(worst_rot < 0.01);
}

TEST_CASE("differentiate") {
    const double dt = 1e-3;
    SUBCASE("linear ramp") {
        std::vector<PoseChannels> c(200);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = {3.0 * k * dt, 0, 0, 0, 0, 0};
        const PoseSeries d = differentiate(series_from(c, dt));
        for (std::size_t k = 0; k < c.size(); ++k) {
            REQUIRE(std::abs(d.velocity[k][0] - 3.0) < 1e-9);
            REQUIRE(std::abs(d.acceleration[k][0]) < 1e-6);
        }
    }
    SUBCASE("sine against the analytic derivative") {
        const double f = 2, a = 20;
        std::vector<PoseChannels> c(1000);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = {a * std::sin(2 * kPi * f * k * dt), 0, 0, 0, 0, 0};
        const PoseSeries d = differentiate(series_from(c, dt));
        const double w = 2 * kPi * f;
        double worst = 0.0;
        for (std::size_t k = 1; k + 1 < c.size(); ++k) {
            worst = std::max(worst, std::abs(d.velocity[k][0] - a * w * std::cos(w * k * dt)));
        }
        // Central-difference truncation: a w^3 dt^2 / 6.
        CHECK(worst <= a * w * w * w * dt * dt / 6 * 1.01);
    }
    SUBCASE("constant pose") {
        const std::vector<PoseChannels> c(10, PoseChannels{1, 2, 3, 4, 5, 6});
        const PoseSeries d = differentiate(series_from(c, dt));
        for (std::size_t k = 0; k < c.size(); ++k) {
            for (int j = 0; j < 6; ++j) {
                REQUIRE(d.velocity[k][j] == 0.0);
                REQUIRE(d.acceleration[k][j] == 0.0);
            }
        }
    }
    SUBCASE("rotation channels are unwrapped") {
        std::vector<PoseChannels> c(50);
        for (std::size_t k = 0; k < c.size(); ++k) {
            double rz = 170.0 + 1.0 * k;
            if (rz > 180) rz -= 360;
            c[k] = {0, 0, 0, 0, 0, rz};
        }
        const PoseSeries d = differentiate(series_from(c, 0.01));
        for (std::size_t k = 0; k < c.size(); ++k) REQUIRE(std::abs(d.velocity[k][5] - 100.0) < 1e-9);
    }
    SUBCASE("too few samples") {
        CHECK_THROWS_AS(differentiate(series_from(std::vector<PoseChannels>(2), dt)), InvalidArgumentError);
    }
}

TEST_CASE("differentiate then integrate recovers the series (property)") {
    const double dt = 1e-3;
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> amp(1, 20), freq(0.5, 5), ph(0, 6.28);
    for (int trial = 0; trial < 20; ++trial) {
        const double a = amp(rng), f = freq(rng), p = ph(rng);
        std::vector<double> x(2000);
        for (std::size_t k = 0; k < x.size(); ++k) x[k] = a * std::sin(2 * kPi * f * k * dt + p);
        const auto v = derivative(x, dt);
        double integral = 0.0, worst = 0.0;
        for (std::size_t k = 1; k < x.size(); ++k) {
            integral += 0.5 * (v[k] + v[k - 1]) * dt;
            worst = std::max(worst, std::abs(integral - (x[k] - x[0])));
        }
        const double w = 2 * kPi * f;
        REQUIRE(worst < 5 * a * w * w * w * dt * dt);
    }
}

TEST_CASE("filter_pose_series keeps constants and wraps rotations") {
    std::vector<PoseChannels> c(100, PoseChannels{1, -2, 3, 10, -20, 179.5});
    const PoseSeries f = filter_pose_series(series_from(c, 1e-3), FilterParams{});
    for (const auto& p : f.poses) {
        REQUIRE(std::abs(p.position.x() - 1) < 1e-9);
        REQUIRE(std::abs(p.orientation.rz - 179.5) < 1e-9);
    }
}

TEST_CASE("rmse_report") {
    std::vector<PoseChannels> c(100);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-10, 10);
    for (auto& v : c) v = {u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    const PoseSeries target = series_from(c, 1e-3);

    SUBCASE("identity") {
        const RmseReport r = rmse_report(target, target);
        for (int a = 0; a < 3; ++a) {
            CHECK(r.translation_mm[a] == 0.0);
            CHECK(r.rotation_deg[a] == 0.0);
        }
    }
    SUBCASE("constant 5 mm offset on x") {
        auto shifted = c;
        for (auto& v : shifted) v[0] += 5.0;
        const RmseReport r = rmse_report(target, series_from(shifted, 1e-3));
        CHECK(std::abs(r.translation_mm[0] - 5.0) < 1e-12);
        CHECK(r.translation_mm[1] == 0.0);
        CHECK(std::abs(r.translation_avg_mm - 5.0 / 3) < 1e-12);
    }
    SUBCASE("averages are exact means") {
        // The published table pairs (5.8, 4.7, 1.6) with 4.4; the exact mean is 4.0333.
        RmseReport r;
        auto a = c, b = c;
        const std::array<double, 3> offs{5.8, 4.7, 1.6};
        for (auto& v : b) {
            for (int i = 0; i < 3; ++i) v[i] += offs[i];
        }
        r = rmse_report(series_from(a, 1e-3), series_from(b, 1e-3));
        CHECK(std::abs(r.translation_avg_mm - 4.033333333333333) < 1e-12);
    }
    SUBCASE("rotation errors wrap at +-180") {
        std::vector<PoseChannels> x(10, PoseChannels{0, 0, 0, 0, 0, 179});
        std::vector<PoseChannels> y(10, PoseChannels{0, 0, 0, 0, 0, -179});
        CHECK(std::abs(rmse_report(series_from(x, 1e-3), series_from(y, 1e-3)).rotation_deg[2] - 2.0) < 1e-9);
    }
    SUBCASE("length and dt mismatch") {
        auto shorter = c;
        shorter.pop_back();
        CHECK_THROWS_AS(rmse_report(target, series_from(shorter, 1e-3)), InvalidArgumentError);
        CHECK_THROWS_AS(rmse_report(target, series_from(c, 2e-3)), InvalidArgumentError);
    }
}

TEST_CASE("rmse_report invariances (property)") {
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> u(-30, 30);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<PoseChannels> a(64), b(64);
        for (std::size_t k = 0; k < a.size(); ++k) {
            for (int j = 0; j < 6; ++j) {
                a[k][j] = u(rng);
                b[k][j] = u(rng);
            }
        }
        const RmseReport base = rmse_report(series_from(a, 1e-3), series_from(b, 1e-3));

        auto ra = a, rb = b;
        std::reverse(ra.begin(), ra.end());
        std::reverse(rb.begin(), rb.end());
        const RmseReport rev = rmse_report(series_from(ra, 1e-3), series_from(rb, 1e-3));

        // Same permutation of the translation axes on both series.
        auto pa = a, pb = b;
        for (auto* s : {&pa, &pb}) {
            for (auto& v : *s) std::swap(v[0], v[2]);
        }
        const RmseReport perm = rmse_report(series_from(pa, 1e-3), series_from(pb, 1e-3));
        for (int i = 0; i < 3; ++i) {
            REQUIRE(std::abs(rev.translation_mm[i] - base.translation_mm[i]) < 1e-12);
            REQUIRE(std::abs(rev.rotation_deg[i] - base.rotation_deg[i]) < 1e-12);
        }
        REQUIRE(std::abs(perm.translation_mm[0] - base.translation_mm[2]) < 1e-12);
        REQUIRE(std::abs(perm.translation_mm[2] - base.translation_mm[0]) < 1e-12);
        REQUIRE(std::abs(perm.translation_avg_mm - base.translation_avg_mm) < 1e-12);
    }
}

TEST_CASE("joint_rmse") {
    std::vector<JointVector> t(50), a(50);
    for (std::size_t k = 0; k < t.size(); ++k) {
        for (int j = 0; j < kNumJoints; ++j) t[k][j] = a[k][j] = 0.01 * static_cast<double>(k + j);
    }
    const JointRmse zero = joint_rmse(t, a);
    for (double v : zero.per_joint_deg) CHECK(v == 0.0);

    for (auto& q : a) q[4] += deg2rad(2.0);
    const JointRmse r = joint_rmse(t, a);
    for (int j = 0; j < kNumJoints; ++j) CHECK(std::abs(r.per_joint_deg[j] - (j == 4 ? 2.0 : 0.0)) < 1e-9);
    CHECK(std::abs(r.leg_avg_deg[1] - 2.0 / 3) < 1e-9);
    CHECK(r.leg_avg_deg[0] == 0.0);

    a.pop_back();
    CHECK_THROWS_AS(joint_rmse(t, a), InvalidArgumentError);
}

}  // TEST_SUITE
