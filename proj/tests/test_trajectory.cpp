#include "motionplat/errors.hpp"
#include "motionplat/trajectory.hpp"

#include <doctest.h>

#include <cmath>

using namespace motionplat;

namespace {

bool poses_equal(const PlatformPose& a, const PlatformPose& b, double tol) {
    return (a.position - b.position).cwiseAbs().maxCoeff() <= tol && std::abs(a.orientation.rx - b.orientation.rx) <= tol &&
           std::abs(a.orientation.ry - b.orientation.ry) <= tol && std::abs(a.orientation.rz - b.orientation.rz) <= tol;
}

void check_uniform_time(const Trajectory& tr) {
    for (std::size_t k = 0; k < tr.size(); ++k) {
        REQUIRE(std::abs(tr.samples[k].t - static_cast<double>(k) * tr.dt) < 1e-12);
        if (k) REQUIRE(tr.samples[k].t > tr.samples[k - 1].t);
    }
}

}  // namespace

TEST_SUITE("trajectory") {

TEST_CASE("gen_sine") {
    SineParams p;
    p.wait_time = 1.0;
    p.run_time = 2.0;
    p.offsets = {1, 2, 3};
    const Trajectory tr = gen_sine(p, 1e-3);
    CHECK(tr.size() == 3001);
    check_uniform_time(tr);

    for (std::size_t k = 0; k <= 1000; ++k) {
        REQUIRE((tr.samples[k].pose.position - Vec3(1, 2, 3)).norm() == 0.0);
        REQUIRE(tr.samples[k].pose.orientation == EulerAngles{});
    }
    // 0.125 s into the run of a 2 Hz, 20 mm x sine is the crest.
    CHECK(std::abs(tr.samples[1125].pose.position.x() - (1 + 20)) < 1e-9);
    CHECK(std::abs(tr.samples.back().pose.position.x() - 1) < 1e-9);
}

TEST_CASE("gen_sine on a rotation axis uses degrees") {
    SineParams p;
    p.axis = PoseAxis::RY;
    p.amplitude = 10;
    p.wait_time = 0;
    p.run_time = 1;
    const Trajectory tr = gen_sine(p, 1e-3);
    CHECK(std::abs(tr.samples[125].pose.orientation.ry - 10) < 1e-9);
    CHECK(tr.samples[125].pose.position.norm() == 0.0);
}

TEST_CASE("gen_sine analytic peak acceleration at 10 Hz, 10 mm") {
    const double peak = std::pow(2 * kPi * 10, 2) * 10 / 1000.0;  // m/s^2
    CHECK(std::abs(peak - 39.47841760435743) < 1e-9);
    CHECK(std::abs(peak / 9.80665 - 4.0) < 0.03);
}

TEST_CASE("gen_sine_sequence plays blocks back to back") {
    std::vector<SineParams> blocks(2);
    blocks[0].axis = PoseAxis::X;
    blocks[1].axis = PoseAxis::RZ;
    blocks[1].amplitude = 10;
    const Trajectory tr = gen_sine_sequence(blocks, 1e-3);
    CHECK(tr.size() == 10001);
    CHECK(std::abs(tr.samples[2125].pose.position.x() - 20) < 1e-9);
    CHECK(std::abs(tr.samples[7125].pose.orientation.rz - 10) < 1e-9);
    CHECK(tr.samples[7125].pose.position.x() == 0.0);
    CHECK_THROWS_AS(gen_sine_sequence({}, 1e-3), InvalidArgumentError);
}

TEST_CASE("gen_sine with zero amplitude equals the home step") {
    SineParams p;
    p.amplitude = 0;
    const Trajectory a = gen_sine(p, 1e-3);
    const Trajectory b = gen_step(PlatformPose::home(), 1.0, p.wait_time + p.run_time, 1e-3);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) REQUIRE(poses_equal(a.samples[k].pose, b.samples[k].pose, 0.0));
}

TEST_CASE("gen_arbitrary") {
    PlatformPose a, b, c;
    b.position = {10, 0, 0};
    c.position = {10, 10, 0};
    c.orientation.rz = 5;

    SUBCASE("single waypoint is constant") {
        const Trajectory tr = gen_arbitrary({b}, {}, 1e-3);
        CHECK(tr.size() == 1);
        CHECK(poses_equal(tr.samples[0].pose, b, 0.0));
    }
    SUBCASE("linear midpoint") {
        const Trajectory tr = gen_arbitrary({a, b}, {1.0}, 1e-3);
        CHECK(std::abs(tr.samples[500].pose.position.x() - 5) < 1e-12);
    }
    SUBCASE("sample count and waypoint hits") {
        const Trajectory tr = gen_arbitrary({a, b, c, a}, {0.7, 1.3, 0.25}, 1e-3);
        CHECK(tr.size() == static_cast<std::size_t>(std::llround(2.25 / 1e-3)) + 1);
        check_uniform_time(tr);
        CHECK(poses_equal(tr.samples[700].pose, b, 1e-9));
        CHECK(poses_equal(tr.samples[2000].pose, c, 1e-9));
        CHECK(poses_equal(tr.samples.back().pose, a, 0.0));
    }
    SUBCASE("cosine blend hits the midpoint and starts with zero slope") {
        const Trajectory tr = gen_arbitrary({a, b}, {1.0}, 1e-3, Interpolation::CosineBlend);
        CHECK(std::abs(tr.samples[500].pose.position.x() - 5) < 1e-12);
        CHECK(tr.samples[1].pose.position.x() < 1e-4);
    }
    SUBCASE("mismatched lengths") {
        CHECK_THROWS_AS(gen_arbitrary({a, b}, {1.0, 1.0}, 1e-3), InvalidArgumentError);
        CHECK_THROWS_AS(gen_arbitrary({}, {}, 1e-3), InvalidArgumentError);
        CHECK_THROWS_AS(gen_arbitrary({a, b}, {-1.0}, 1e-3), InvalidArgumentError);
    }
}

TEST_CASE("gen_step is right-continuous") {
    PlatformPose target;
    target.position = {5, -3, 2};
    target.orientation = {1, 2, 3};
    const Trajectory tr = gen_step(target, 0.5, 1.0, 1e-3);
    CHECK(tr.size() == 1001);
    CHECK(poses_equal(tr.samples[499].pose, PlatformPose::home(), 0.0));
    CHECK(poses_equal(tr.samples[500].pose, target, 0.0));
    CHECK(poses_equal(tr.samples.back().pose, target, 0.0));

    // 1/240 s grid: step_time 0.1 lands on sample 24.
    const Trajectory sim = gen_step(target, 0.1, 0.2, 1.0 / 240.0);
    CHECK(poses_equal(sim.samples[23].pose, PlatformPose::home(), 0.0));
    CHECK(poses_equal(sim.samples[24].pose, target, 0.0));

    CHECK_THROWS_AS(gen_step(target, 2.0, 1.0, 1e-3), InvalidArgumentError);
}

TEST_CASE("gen_circular") {
    CircularParams p;
    p.rounds = 1;
    p.frequency = 1;
    p.radius = 20;

    SUBCASE("phase zero starts at (radius, 0)") {
        const Trajectory tr = gen_circular(p, 1e-3);
        CHECK((tr.samples[0].pose.position - Vec3(20, 0, 0)).norm() == 0.0);
    }
    SUBCASE("counter-clockwise quarter period reaches (0, radius)") {
        p.direction = CircleDirection::CounterClockwise;
        const Trajectory tr = gen_circular(p, 1e-3);
        CHECK((tr.samples[250].pose.position - Vec3(0, 20, 0)).norm() < 1e-12);
        CHECK(std::abs(tr.samples[250].pose.orientation.rz - 10) < 1e-12);
    }
    SUBCASE("clockwise quarter period reaches (0, -radius)") {
        const Trajectory tr = gen_circular(p, 1e-3);
        CHECK((tr.samples[250].pose.position - Vec3(0, -20, 0)).norm() < 1e-12);
    }
    SUBCASE("disabled channels stay at home") {
        p.translation_enabled = false;
        const Trajectory tr = gen_circular(p, 1e-3);
        for (const auto& s : tr.samples) REQUIRE(s.pose.position.norm() == 0.0);
        p.translation_enabled = true;
        p.rotation_enabled = false;
        for (const auto& s : gen_circular(p, 1e-3).samples) REQUIRE(s.pose.orientation == EulerAngles{});
    }
    SUBCASE("spin mode wraps into (-180, 180]") {
        p.rotation_mode = CircularRotationMode::Spin;
        p.direction = CircleDirection::CounterClockwise;
        const Trajectory tr = gen_circular(p, 1e-3);
        CHECK(std::abs(tr.samples[250].pose.orientation.rz - 90) < 1e-9);
        CHECK(std::abs(tr.samples[750].pose.orientation.rz + 90) < 1e-9);
        for (const auto& s : tr.samples) REQUIRE((s.pose.orientation.rz > -180 && s.pose.orientation.rz <= 180));
    }
    SUBCASE("invalid parameters") {
        p.rounds = 0;
        CHECK_THROWS_AS(gen_circular(p, 1e-3), InvalidArgumentError);
    }
}

TEST_CASE("gen_circular closes over integer rounds (property)") {
    for (int rounds : {1, 3, 20}) {
        for (double f : {0.5, 2.0, 5.0}) {
            for (auto mode : {CircularRotationMode::Oscillate, CircularRotationMode::Spin}) {
                CircularParams p;
                p.rounds = rounds;
                p.frequency = f;
                p.rotation_mode = mode;
                const Trajectory tr = gen_circular(p, 1e-3);
                REQUIRE(std::abs(tr.duration() - rounds / f) < 1e-9);
                REQUIRE(poses_equal(tr.samples.back().pose, tr.samples.front().pose, 1e-9));
            }
        }
    }
}

TEST_CASE("generators reject a bad dt") {
    CHECK_THROWS_AS(gen_sine(SineParams{}, 0.0), InvalidArgumentError);
    CHECK_THROWS_AS(gen_step(PlatformPose::home(), 0.1, 1.0, -1.0), InvalidArgumentError);
}

TEST_CASE("validate_trajectory flags out-of-box samples") {
    SineParams p;
    p.amplitude = 300;
    p.wait_time = 0;
    p.run_time = 0.5;
    const Trajectory tr = gen_sine(p, 1e-3);
    const auto warnings = validate_trajectory(tr, {});
    CHECK_FALSE(warnings.empty());
    for (const auto& w : warnings) REQUIRE(std::abs(tr.samples[w.index].pose.position.x()) > 255);

    SineParams ok;
    CHECK(validate_trajectory(gen_sine(ok, 1e-3), {}).empty());
}

TEST_CASE("axis names") {
    for (PoseAxis a : {PoseAxis::X, PoseAxis::Y, PoseAxis::Z, PoseAxis::RX, PoseAxis::RY, PoseAxis::RZ}) {
        CHECK(parse_axis(axis_name(a)) == a);
    }
    CHECK_THROWS_AS(parse_axis("w"), InvalidArgumentError);
}

}  // TEST_SUITE
