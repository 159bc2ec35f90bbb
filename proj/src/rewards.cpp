#include "cartq/rewards.hpp"

#include <cmath>
#include <stdexcept>

namespace cartq {

double reward_quadratic(double x, double r) {
    const double d = x - r;
    return -(d * d);
}

double reward_piecewise_linear(double x, double r) {
    if (x > r / 2.0 && x < 3.0 * r / 2.0) return r / 2.0 - std::abs(x - r);
    return 0.0;
}

double reward_banded(double x, double r) {
    const double inner_lo = r - 0.1;
    const double inner_hi = r + 0.1;
    if (x > inner_lo && x < inner_hi) return 5.0;
    if ((x >= r - 1.0 && x <= inner_lo) || (x >= inner_hi && x <= r + 1.0)) return 1.0;
    return 0.0;
}

double reward(RewardKind kind, double x, double r) {
    switch (kind) {
        case RewardKind::Quadratic: return reward_quadratic(x, r);
        case RewardKind::PiecewiseLinear: return reward_piecewise_linear(x, r);
        case RewardKind::Banded: return reward_banded(x, r);
    }
    throw std::logic_error("unreachable reward kind");
}

RewardKind reward_kind_from_string(const std::string& name) {
    if (name == "quadratic") return RewardKind::Quadratic;
    if (name == "linear") return RewardKind::PiecewiseLinear;
    if (name == "banded") return RewardKind::Banded;
    throw std::invalid_argument("reward_kind: expected quadratic|linear|banded, got \"" + name + "\"");
}

std::string to_string(RewardKind kind) {
    switch (kind) {
        case RewardKind::Quadratic: return "quadratic";
        case RewardKind::PiecewiseLinear: return "linear";
        case RewardKind::Banded: return "banded";
    }
    throw std::logic_error("unreachable reward kind");
}

}  // namespace cartq
