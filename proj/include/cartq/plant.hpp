#ifndef CARTQ_PLANT_HPP
#define CARTQ_PLANT_HPP

namespace cartq {

// Physical constants of the motor-driven cart.
struct MotorConstants {
    double eta_g;  // gearbox efficiency
    double K_g;    // gearbox gear ratio
    double eta_m;  // motor efficiency
    double K_t;    // motor torque constant (N*m/A)
    double r_mp;   // motor pinion radius (m)
    double K_m;    // back-EMF constant (V*s/rad)
    double R_m;    // armature resistance (ohm)
    double nu;     // viscous friction coefficient (N*s/m)
    double M;      // cart mass (kg)
};

// Reduced plant: x_ddot = alpha * x_dot + beta * V, alpha < 0 < beta.
struct PlantParams {
    double alpha;  // 1/s
    double beta;   // m/(s^2*V)
};

// Continuous state: position and velocity.
struct PlantState {
    double x;  // m
    double s;  // m/s
};

// Fixed-step simulation settings shared by training and the baseline.
struct SimConfig {
    double dt = 0.2;       // Euler step size (s)
    double x_min = -10.0;  // position bounds
    double x_max = 20.0;
    double r = 10.0;       // target position (m)
    int max_steps = 50;    // step cap per round
    double x0 = 0.0;       // initial position
    double s0 = 0.0;       // initial velocity
};

// Collapses the motor constants into (alpha, beta). Throws
// std::invalid_argument on non-positive M, R_m or r_mp, or when the
// resulting pair violates alpha < 0 < beta.
PlantParams derive_params(const MotorConstants& c);

// alpha * s + beta * V
double accel(const PlantParams& p, const PlantState& st, double voltage);

// One explicit forward Euler step; position advances with the pre-step
// velocity and V is held constant across the step.
PlantState euler_step(const PlantParams& p, const PlantState& st, double voltage, double dt);

// Closed-form zero-input position: C1*exp(alpha*t) + C2 with
// C1 = s0/alpha, C2 = x0 - s0/alpha.
double free_response(const PlantParams& p, const PlantState& st0, double t);

// The measured output: position only. Velocity stays hidden from agents.
double observe(const PlantState& st);

}  // namespace cartq

#endif  // CARTQ_PLANT_HPP
