#ifndef CARTQ_BASELINE_HPP
#define CARTQ_BASELINE_HPP

#include <complex>

#include "cartq/plant.hpp"
#include "cartq/trajectory.hpp"

namespace cartq {

struct BaselineConfig {
    double kp = 0.2;
    PlantParams plant{-1.0, 10.0};
    SimConfig sim{};          // max_steps doubles as the rollout horizon
    double bin_width = 0.1;   // grid used when summarizing the run
    int tail_window = 20;     // records summarized by steady-state reports
    bool discretize = false;  // snap voltages to the learner's action set
};

struct EigenPair {
    std::complex<double> lambda1;
    std::complex<double> lambda2;
};

// Proportional control law V = kp * (r - x).
double proportional_voltage(double kp, double r, double x);

// Eigenvalues of the closed loop x'' = alpha x' + beta kp (r - x):
// alpha/2 +- sqrt(alpha^2/4 - beta kp), complex when the discriminant is
// negative.
EigenPair closed_loop_eigenvalues(const PlantParams& plant, double kp);

bool is_hurwitz(const EigenPair& eig);

// Limit of x(t) under the closed loop. Requires a Hurwitz loop; throws
// std::domain_error otherwise.
double steady_state_prediction(const PlantParams& plant, double kp, double r);

// Euler rollout of the proportional loop for exactly n_steps transitions,
// from the configured start state. The continuous law is applied as-is;
// with discretize set, the voltage is rounded to the nearest integer and
// clamped to [-5, 5] to match the learner's action set. Records follow
// the trajectory convention (V stored on the departure record); the
// reward column stays 0.
Trajectory simulate_baseline(const BaselineConfig& cfg, int n_steps, bool discretize = false);

}  // namespace cartq

#endif  // CARTQ_BASELINE_HPP
