#include "cartq/plant.hpp"

#include <cmath>
#include <stdexcept>

namespace cartq {

PlantParams derive_params(const MotorConstants& c) {
    if (!(c.M > 0.0)) throw std::invalid_argument("M: must be > 0");
    if (!(c.R_m > 0.0)) throw std::invalid_argument("R_m: must be > 0");
    if (!(c.r_mp > 0.0)) throw std::invalid_argument("r_mp: must be > 0");

    const double denom = c.M * c.R_m * c.r_mp * c.r_mp;
    const double alpha = -(c.eta_g * c.K_g * c.K_g * c.eta_m * c.K_t * c.K_m) / denom - c.nu / c.M;
    const double beta = (c.eta_g * c.K_g * c.eta_m * c.K_t * c.r_mp) / denom;

    if (!(alpha < 0.0)) throw std::invalid_argument("alpha: derived value must be < 0");
    if (!(beta > 0.0)) throw std::invalid_argument("beta: derived value must be > 0");
    return {alpha, beta};
}

double accel(const PlantParams& p, const PlantState& st, double voltage) {
    return p.alpha * st.s + p.beta * voltage;
}

PlantState euler_step(const PlantParams& p, const PlantState& st, double voltage, double dt) {
    return {st.x + dt * st.s, st.s + dt * accel(p, st, voltage)};
}

double free_response(const PlantParams& p, const PlantState& st0, double t) {
    const double c1 = st0.s / p.alpha;
    const double c2 = st0.x - c1;
    return c1 * std::exp(p.alpha * t) + c2;
}

double observe(const PlantState& st) {
    return st.x;
}

}  // namespace cartq
