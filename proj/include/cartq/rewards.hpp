#ifndef CARTQ_REWARDS_HPP
#define CARTQ_REWARDS_HPP

#include <string>

namespace cartq {

enum class RewardKind { Quadratic, PiecewiseLinear, Banded };

// -(x - r)^2; zero only at the target.
double reward_quadratic(double x, double r);

// r/2 - |x - r| inside (r/2, 3r/2), else 0. Boundaries are exclusive.
double reward_piecewise_linear(double x, double r);

// 5 inside the open band (r-0.1, r+0.1); 1 on the closed outer bands
// [r-1, r-0.1] and [r+0.1, r+1]; else 0. Band edges are compared against
// the computed endpoints r-0.1, r+0.1, r-1, r+1 so that e.g. x = 9.9
// with r = 10 lands on the closed edge exactly.
double reward_banded(double x, double r);

double reward(RewardKind kind, double x, double r);

// Config/CLI spellings: "quadratic" | "linear" | "banded".
RewardKind reward_kind_from_string(const std::string& name);
std::string to_string(RewardKind kind);

}  // namespace cartq

#endif  // CARTQ_REWARDS_HPP
