#include "motionplat/errors.hpp"
#include "motionplat/sim_env.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>

using namespace motionplat;

namespace {

const Robot kRobot = default_robot();
const PlatformGeometry kPlatform = default_platform();

JointVector home_q() { return solve_platform_ik(PlatformPose::home(), kRobot, kPlatform); }

double kinetic_energy(const JointArray& qdot, double inertia) {
    double e = 0.0;
    for (double v : qdot) e += 0.5 * inertia * v * v;
    return e;
}

bool bit_identical(const SimLog& a, const SimLog& b) {
    if (a.records.size() != b.records.size()) return false;
    for (std::size_t k = 0; k < a.records.size(); ++k) {
        const SimRecord& x = a.records[k];
        const SimRecord& y = b.records[k];
        if (std::memcmp(&x.t, &y.t, sizeof x.t) || std::memcmp(x.q_actual.q.data(), y.q_actual.q.data(), sizeof x.q_actual.q) ||
            std::memcmp(x.qdot.data(), y.qdot.data(), sizeof x.qdot) ||
            std::memcmp(x.tau.data(), y.tau.data(), sizeof x.tau) ||
            std::memcmp(x.current.data(), y.current.data(), sizeof x.current)) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_SUITE("sim-env") {

TEST_CASE("gravity_torque") {
    const JointVector q = home_q();

    SUBCASE("no load without mass") {
        for (double t : gravity_torque(q, 0.0, 9.81, kRobot)) CHECK(t == 0.0);
    }
    SUBCASE("a straight hanging leg carries no hip-FE or knee torque") {
        JointVector straight;
        const JointArray tau = gravity_torque(straight, 1.4, 9.81, kRobot);
        for (int i = 0; i < kNumLegs; ++i) {
            CHECK(std::abs(tau[3 * i + 1]) < 1e-15);
            CHECK(std::abs(tau[3 * i + 2]) < 1e-15);
        }
    }
    SUBCASE("equals -dU/dq of the per-leg weight share (finite differences)") {
        const double m = 1.4, g = 9.81, h = 1e-6;
        // U = sum (m/4) g (-z_foot) in joules with z in metres: the load acts along +z.
        auto potential = [&](const JointVector& qq) {
            double u = 0.0;
            for (int i = 0; i < kNumLegs; ++i) u += m / 4 * g * (-leg_fk(qq.leg(i), kRobot.legs[i]).z() * 1e-3);
            return u;
        };
        const JointArray tau = gravity_torque(q, m, g, kRobot);
        for (int j = 0; j < kNumJoints; ++j) {
            JointVector qp = q, qm = q;
            qp[j] += h;
            qm[j] -= h;
            const double fd = -(potential(qp) - potential(qm)) / (2 * h);
            CHECK(std::abs(fd - tau[j]) < 1e-6);
        }
    }
    SUBCASE("scales linearly with mass") {
        const JointArray a = gravity_torque(q, 1.0, 9.81, kRobot);
        const JointArray b = gravity_torque(q, 3.0, 9.81, kRobot);
        for (int j = 0; j < kNumJoints; ++j) CHECK(std::abs(3 * a[j] - b[j]) < 1e-15);
    }
}

TEST_CASE("pd_control") {
    const ActuatorParams act;

    SUBCASE("zero error gives zero output") {
        const ActuatorCommand c = pd_control(0.3, 0.3, 0.0, 10, 0.3, act, 0.0, false);
        CHECK(c.tau == 0.0);
        CHECK(c.current == 0.0);
    }
    SUBCASE("torque clamp binds before the current clamp with default parameters") {
        CHECK(15.0 * 9 * 0.025 == doctest::Approx(3.375));
        const ActuatorCommand c = pd_control(10.0, 0.0, 0.0, 10, 0.3, act, 0.0, false);
        CHECK(c.tau == 2.7);
        CHECK(std::abs(c.current - 12.0) < 1e-12);
        const ActuatorCommand n = pd_control(-10.0, 0.0, 0.0, 10, 0.3, act, 0.0, false);
        CHECK(n.tau == -2.7);
        CHECK(std::abs(n.current + 12.0) < 1e-12);
    }
    SUBCASE("current clamp binds when the motor is weaker") {
        ActuatorParams weak = act;
        weak.kt_motor = 0.01;  // 15 A -> 1.35 N m
        const ActuatorCommand c = pd_control(10.0, 0.0, 0.0, 10, 0.3, weak, 0.0, false);
        CHECK(c.current == 15.0);
        CHECK(std::abs(c.tau - 1.35) < 1e-12);
    }
    SUBCASE("linear below the clamps") {
        const ActuatorCommand a = pd_control(0.01, 0.0, 0.0, 10, 0.3, act, 0.0, false);
        const ActuatorCommand b = pd_control(0.02, 0.0, 0.0, 10, 0.3, act, 0.0, false);
        CHECK(std::abs(b.tau - 2 * a.tau) < 1e-15);
        CHECK(std::abs(b.current - 2 * a.current) < 1e-15);
        CHECK(std::abs(a.current - a.tau / 0.225) < 1e-15);
    }
    SUBCASE("compensation cancels the load") {
        const ActuatorCommand c = pd_control(0.0, 0.0, 0.0, 10, 0.3, act, 0.4, true);
        CHECK(c.tau == -0.4);
        CHECK(pd_control(0.0, 0.0, 0.0, 10, 0.3, act, 0.4, false).tau == 0.0);
    }
}

TEST_CASE("sim_step") {
    SimParams params;
    params.payload_mass = 0;
    params.platform_mass = 0;
    const ActuatorParams act;
    const JointVector q0 = home_q();

    SUBCASE("equilibrium without gravity") {
        SimState s;
        s.q = q0;
        const SimState next = sim_step(s, q0, params, act, kRobot);
        CHECK(next.q == q0);
        CHECK(next.t == params.dt);
        for (double v : next.qdot) CHECK(v == 0.0);
    }
    SUBCASE("overdamped gains converge monotonically") {
        params.kp.fill(10.0);
        params.kd.fill(1.5 * 2 * std::sqrt(10.0 * act.reflected_inertia));
        SimState s;
        JointVector target = q0;
        for (int j = 0; j < kNumJoints; ++j) target[j] += 0.05;
        s.q = q0;
        double prev = 0.05;
        for (int k = 0; k < 3000; ++k) {
            s = sim_step(s, target, params, act, kRobot);
            const double err = target[0] - s.q[0];
            REQUIRE(err <= prev + 1e-15);
            REQUIRE(err >= -1e-12);
            prev = err;
        }
        CHECK(prev < 1e-6);
    }
    SUBCASE("divergence raises InstabilityError") {
        params.kp.fill(1e9);
        ActuatorParams loose = act;
        loose.tau_max = 1e308;
        loose.i_max = 1e308;
        SimState s;
        s.q = q0;
        JointVector target = q0;
        target[0] += 1.0;
        CHECK_THROWS_AS(
            [&] {
                for (int k = 0; k < 10000; ++k) s = sim_step(s, target, params, loose, kRobot);
            }(),
            InstabilityError);
    }
}

TEST_CASE("gravity-offset law") {
    const SimParams params;
    const ActuatorParams act;
    const std::vector<JointVector> traj(5000, home_q());

    const SimLog off = run_sim(traj, params, act, kRobot);
    const JointVector q_ss = off.records.back().q_actual;
    const JointArray load = gravity_torque(q_ss, params.total_mass(), params.gravity, kRobot);
    for (int j = 0; j < kNumJoints; ++j) {
        CHECK(std::abs((q_ss[j] - traj[0][j]) - load[j] / params.kp[j]) < 1e-6);
    }

    SimParams comp = params;
    comp.gravity_compensation = true;
    const SimLog on = run_sim(traj, comp, act, kRobot);
    for (int j = 0; j < kNumJoints; ++j) CHECK(std::abs(on.records.back().q_actual[j] - traj[0][j]) < 1e-9);
}

TEST_CASE("energy is non-increasing without drive or gravity") {
    SimParams params;
    params.gravity = 0;
    params.kp.fill(0.0);
    const ActuatorParams act;
    SimState s;
    s.q = home_q();
    s.qdot.fill(3.0);
    double prev = kinetic_energy(s.qdot, act.reflected_inertia);
    for (int k = 0; k < 2000; ++k) {
        s = sim_step(s, home_q(), params, act, kRobot);
        const double e = kinetic_energy(s.qdot, act.reflected_inertia);
        REQUIRE(e <= prev);
        prev = e;
    }
    CHECK(prev < 1e-6);
}

TEST_CASE("run_sim") {
    SimParams params;
    const ActuatorParams act;
    JointVector a = home_q(), b = home_q();
    for (int j = 0; j < kNumJoints; ++j) b[j] += 0.02 * std::sin(j);
    std::vector<JointVector> traj;
    for (int k = 0; k < 600; ++k) traj.push_back(k < 300 ? a : b);

    const SimLog log = run_sim(traj, params, act, kRobot);
    CHECK(log.records.size() == traj.size());
    CHECK(log.dt == params.dt);
    CHECK(log.records[0].q_actual == traj[0]);
    for (std::size_t k = 0; k < log.records.size(); ++k) {
        REQUIRE(std::abs(log.records[k].t - k * params.dt) < 1e-12);
        REQUIRE(log.records[k].q_target == traj[k]);
        for (int j = 0; j < kNumJoints; ++j) {
            REQUIRE(std::abs(log.records[k].tau[j]) <= act.tau_max);
            REQUIRE(std::abs(log.records[k].current[j]) <= act.i_max);
        }
    }
    CHECK(bit_identical(log, run_sim(traj, params, act, kRobot)));

    SUBCASE("constant target without gravity does not move") {
        SimParams g0 = params;
        g0.gravity = 0;
        const SimLog still = run_sim(std::vector<JointVector>(100, a), g0, act, kRobot);
        for (const auto& r : still.records) REQUIRE(r.q_actual == a);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(run_sim({}, params, act, kRobot), InvalidArgumentError);
        SimParams bad = params;
        bad.dt = 0;
        CHECK_THROWS_AS(run_sim(traj, bad, act, kRobot), InvalidArgumentError);
        ActuatorParams bad_act = act;
        bad_act.reflected_inertia = 0;
        CHECK_THROWS_AS(run_sim(traj, params, bad_act, kRobot), InvalidArgumentError);
    }
}

TEST_CASE("default gains keep step overshoot under 10 percent") {
    SimParams params;
    params.gravity = 0;
    const ActuatorParams act;
    const JointVector a = home_q();
    JointVector b = a;
    for (int j = 0; j < kNumJoints; ++j) b[j] += 0.05;
    std::vector<JointVector> traj{a};
    traj.insert(traj.end(), 2000, b);
    const SimLog log = run_sim(traj, params, act, kRobot);
    double peak = 0.0;
    for (const auto& r : log.records) peak = std::max(peak, r.q_actual[0] - a[0]);
    CHECK(peak > 0.05);
    CHECK((peak - 0.05) / 0.05 < 0.10);
}

}  // TEST_SUITE
