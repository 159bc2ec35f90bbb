#include "cartq/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cartq {

double proportional_voltage(double kp, double r, double x) {
    return kp * (r - x);
}

EigenPair closed_loop_eigenvalues(const PlantParams& plant, double kp) {
    const double half = plant.alpha / 2.0;
    const std::complex<double> root =
        std::sqrt(std::complex<double>(half * half - plant.beta * kp, 0.0));
    return {half + root, half - root};
}

bool is_hurwitz(const EigenPair& eig) {
    return eig.lambda1.real() < 0.0 && eig.lambda2.real() < 0.0;
}

double steady_state_prediction(const PlantParams& plant, double kp, double r) {
    if (!is_hurwitz(closed_loop_eigenvalues(plant, kp))) {
        throw std::domain_error("kp: closed loop is not Hurwitz; no finite steady state");
    }
    return r;
}

Trajectory simulate_baseline(const BaselineConfig& cfg, int n_steps, bool discretize) {
    const SimConfig& sim = cfg.sim;

    Trajectory traj;
    traj.steps.reserve(static_cast<std::size_t>(n_steps) + 1);

    PlantState st{sim.x0, sim.s0};
    traj.steps.push_back({0.0, st.x, st.s, 0.0, 0.0});

    for (int k = 1; k <= n_steps; ++k) {
        double voltage = proportional_voltage(cfg.kp, sim.r, observe(st));
        if (discretize) {
            voltage = static_cast<double>(std::clamp<long long>(std::llround(voltage), -5, 5));
        }
        traj.steps.back().V = voltage;
        st = euler_step(cfg.plant, st, voltage, sim.dt);
        traj.steps.push_back({static_cast<double>(k) * sim.dt, st.x, st.s, 0.0, 0.0});
    }
    return traj;
}

}  // namespace cartq
