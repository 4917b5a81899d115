#pragma once

// Fixed-timestep joint-space simulator. Every joint is an independent double integrator
// with the motor's reflected inertia, driven by a saturating PD law and loaded by the
// platform weight mapped through the leg Jacobians.

#include "motionplat/kinematics.hpp"

#include <array>
#include <vector>

namespace motionplat {

using JointArray = std::array<double, kNumJoints>;

struct ActuatorParams {
    double tau_max = 2.7;              ///< joint-side torque limit, N m
    double gear_ratio = 9.0;
    double kt_motor = 0.025;           ///< motor-side torque constant, N m / A
    double i_max = 15.0;               ///< current limit, A
    double reflected_inertia = 0.005;  ///< kg m^2 at the joint
};

struct SimParams {
    double dt = 1.0 / 1000.0;
    JointArray kp;  ///< N m / rad
    JointArray kd;  ///< N m s / rad
    double gravity = 9.81;
    double payload_mass = 1.2;   ///< kg
    double platform_mass = 0.2;  ///< kg
    bool gravity_compensation = false;

    SimParams() {
        kp.fill(10.0);
        kd.fill(0.3);
    }
    double total_mass() const { return payload_mass + platform_mass; }
};

void validate(const ActuatorParams& a);
void validate(const SimParams& p);

struct SimState {
    JointVector q;
    JointArray qdot{};
    JointArray tau{};      ///< torque applied during the last step
    JointArray current{};  ///< matching motor current
    double t = 0.0;
};

struct SimRecord {
    double t = 0.0;
    JointVector q_target;
    JointVector q_actual;
    JointArray qdot{};
    JointArray tau{};
    JointArray current{};
};

struct SimLog {
    double dt = 0.0;
    std::vector<SimRecord> records;
};

/// Generalised load torque (N m) the platform weight exerts on every joint:
/// J_i^T f per leg with f = total_mass * g / 4 along +z (physical down in the body frame).
/// Equals -dU/dq for U = sum over legs of (total_mass/4) * g * (-z_foot).
JointArray gravity_torque(const JointVector& q, double total_mass, double gravity, const Robot& robot);

struct ActuatorCommand {
    double tau = 0.0;
    double current = 0.0;
};

/// tau = kp (q_target - q) - kd qdot, minus `tau_gravity` when compensating; clamped at
/// tau_max and then at i_max, the torque following the current clamp.
ActuatorCommand pd_control(double q_target, double q, double qdot, double kp, double kd,
                           const ActuatorParams& actuator, double tau_gravity, bool gravity_compensation);

/// One semi-implicit Euler step (velocity first, then position).
/// Throws InstabilityError (tick 0) when the new state is not finite.
SimState sim_step(const SimState& state, const JointVector& q_target, const SimParams& params,
                  const ActuatorParams& actuator, const Robot& robot);

/// Something that accepts joint targets at a fixed rate and reports what it measured.
/// The simulator implements it; a hardware driver would too.
class ControlEnvironment {
public:
    virtual ~ControlEnvironment() = default;

    virtual double dt() const = 0;
    /// Places the robot at rest at `q0`, time 0.
    virtual void reset(const JointVector& q0) = 0;
    /// Samples the state, commands `q_target` for one tick and returns the sampled record.
    virtual SimRecord tick(const JointVector& q_target) = 0;
};

class SimulatedEnvironment final : public ControlEnvironment {
public:
    SimulatedEnvironment(SimParams params, ActuatorParams actuator, Robot robot);

    double dt() const override { return params_.dt; }
    void reset(const JointVector& q0) override;
    SimRecord tick(const JointVector& q_target) override;

    const SimState& state() const { return state_; }

private:
    SimParams params_;
    ActuatorParams actuator_;
    Robot robot_;
    SimState state_;
    std::size_t ticks_ = 0;
};

/// Resets the environment at the first target and ticks once per target.
SimLog run_control(ControlEnvironment& env, const std::vector<JointVector>& joint_traj);

SimLog run_sim(const std::vector<JointVector>& joint_traj, const SimParams& params, const ActuatorParams& actuator,
               const Robot& robot);

}  // namespace motionplat
