#include "motionplat/sim_env.hpp"

#include "motionplat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace motionplat {

void validate(const ActuatorParams& a) {
    const std::array<std::pair<const char*, double>, 5> fields{{{"tau_max", a.tau_max},
                                                                {"gear_ratio", a.gear_ratio},
                                                                {"kt_motor", a.kt_motor},
                                                                {"i_max", a.i_max},
                                                                {"reflected_inertia", a.reflected_inertia}}};
    for (const auto& [name, value] : fields) {
        if (!(value > 0.0) || !std::isfinite(value)) {
            throw InvalidArgumentError(std::string("actuator.") + name + ": must be > 0");
        }
    }
}

void validate(const SimParams& p) {
    if (!(p.dt > 0.0) || !std::isfinite(p.dt)) throw InvalidArgumentError("sim.dt: must be > 0");
    for (int i = 0; i < kNumJoints; ++i) {
        if (!(p.kp[i] >= 0.0) || !std::isfinite(p.kp[i])) throw InvalidArgumentError("sim.kp: gains must be >= 0");
        if (!(p.kd[i] >= 0.0) || !std::isfinite(p.kd[i])) throw InvalidArgumentError("sim.kd: gains must be >= 0");
    }
    if (!(p.gravity >= 0.0)) throw InvalidArgumentError("sim.gravity: must be >= 0");
    if (!(p.payload_mass >= 0.0)) throw InvalidArgumentError("sim.payload_mass: must be >= 0");
    if (!(p.platform_mass >= 0.0)) throw InvalidArgumentError("sim.platform_mass: must be >= 0");
}

JointArray gravity_torque(const JointVector& q, double total_mass, double gravity, const Robot& robot) {
    JointArray tau{};
    // mm/rad Jacobian, force in N: scale to N m.
    const Vec3 force(0.0, 0.0, total_mass * gravity / kNumLegs);
    for (int i = 0; i < kNumLegs; ++i) {
        const Vec3 leg_tau = 1e-3 * leg_jacobian(q.leg(i), robot.legs[i]).transpose() * force;
        for (int j = 0; j < kJointsPerLeg; ++j) tau[3 * i + j] = leg_tau[j];
    }
    return tau;
}

ActuatorCommand pd_control(double q_target, double q, double qdot, double kp, double kd,
                           const ActuatorParams& actuator, double tau_gravity, bool gravity_compensation) {
    double tau = kp * (q_target - q) - kd * qdot;
    if (gravity_compensation) tau -= tau_gravity;
    tau = std::clamp(tau, -actuator.tau_max, actuator.tau_max);
    const double amps_per_nm = 1.0 / (actuator.gear_ratio * actuator.kt_motor);
    double current = tau * amps_per_nm;
    if (std::abs(current) > actuator.i_max) {
        current = std::copysign(actuator.i_max, current);
        tau = current * actuator.gear_ratio * actuator.kt_motor;
    }
    return {tau, current};
}

SimState sim_step(const SimState& state, const JointVector& q_target, const SimParams& params,
                  const ActuatorParams& actuator, const Robot& robot) {
    const JointArray load = gravity_torque(state.q, params.total_mass(), params.gravity, robot);
    SimState next = state;
    for (int i = 0; i < kNumJoints; ++i) {
        const ActuatorCommand cmd = pd_control(q_target[i], state.q[i], state.qdot[i], params.kp[i], params.kd[i],
                                               actuator, load[i], params.gravity_compensation);
        const double qddot = (cmd.tau + load[i]) / actuator.reflected_inertia;
        next.qdot[i] = state.qdot[i] + params.dt * qddot;
        next.q[i] = state.q[i] + params.dt * next.qdot[i];
        next.tau[i] = cmd.tau;
        next.current[i] = cmd.current;
        if (!std::isfinite(next.q[i]) || !std::isfinite(next.qdot[i])) {
            throw InstabilityError("simulation diverged at joint " + std::to_string(i), 0);
        }
    }
    next.t = state.t + params.dt;
    return next;
}

SimulatedEnvironment::SimulatedEnvironment(SimParams params, ActuatorParams actuator, Robot robot)
    : params_(std::move(params)), actuator_(actuator), robot_(std::move(robot)) {
    validate(params_);
    validate(actuator_);
}

void SimulatedEnvironment::reset(const JointVector& q0) {
    state_ = SimState{};
    state_.q = q0;
    ticks_ = 0;
}

SimRecord SimulatedEnvironment::tick(const JointVector& q_target) {
    SimRecord rec;
    rec.t = static_cast<double>(ticks_) * params_.dt;
    rec.q_target = q_target;
    rec.q_actual = state_.q;
    rec.qdot = state_.qdot;
    try {
        state_ = sim_step(state_, q_target, params_, actuator_, robot_);
    } catch (const InstabilityError& e) {
        throw InstabilityError(std::string(e.what()) + " (tick " + std::to_string(ticks_) + ")", ticks_);
    }
    rec.tau = state_.tau;
    rec.current = state_.current;
    ++ticks_;
    return rec;
}

SimLog run_control(ControlEnvironment& env, const std::vector<JointVector>& joint_traj) {
    if (joint_traj.empty()) throw InvalidArgumentError("run_sim: empty joint trajectory");
    SimLog log;
    log.dt = env.dt();
    log.records.reserve(joint_traj.size());
    env.reset(joint_traj.front());
    for (const JointVector& target : joint_traj) log.records.push_back(env.tick(target));
    return log;
}

SimLog run_sim(const std::vector<JointVector>& joint_traj, const SimParams& params, const ActuatorParams& actuator,
               const Robot& robot) {
    SimulatedEnvironment env(params, actuator, robot);
    return run_control(env, joint_traj);
}

}  // namespace motionplat
