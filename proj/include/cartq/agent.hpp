#ifndef CARTQ_AGENT_HPP
#define CARTQ_AGENT_HPP

#include <vector>

#include "cartq/rng.hpp"

namespace cartq {

// Uniform position bins over [x_min, x_max]. The closing boundary gets a
// bin of its own, so a grid spanning k widths has k+1 bins.
struct QuantizationGrid {
    double x_min = -10.0;
    double x_max = 20.0;
    double bin_width = 0.1;

    int num_bins() const;
};

// Bin index of x. Out-of-range positions clamp to the boundary bins.
// Computed as floor((x - x_min) * (1 / bin_width)); the reciprocal keeps
// exact decimal boundaries (e.g. x = 10.0 on the 0.1 grid) in the upper
// bin, which plain division misses by one ulp.
int quantize(const QuantizationGrid& grid, double x);

double bin_center(const QuantizationGrid& grid, int bin);

struct AgentConfig {
    double zeta = 0.05;         // learning rate
    double gamma = 0.9;         // discount factor
    double epsilon0 = 1.0;      // initial exploration rate
    long long n_train = 30000;  // schedule horizon in global time steps
};

// Exploration decay, evaluated once per global time step. With
// remaining = n_train - t: a slow decrement epsilon0/(3*n_train) while
// remaining > 0.7*n_train or 0 < remaining <= 0.3*n_train, a fast
// decrement 2*epsilon0/n_train while 0.3*n_train < remaining <=
// 0.7*n_train, and exactly 0 once remaining <= 0. Thresholds are compared
// in integer arithmetic (10*remaining vs 7*n_train / 3*n_train). Result is
// clamped to [0, 1].
double epsilon_step(const AgentConfig& cfg, double eps, long long t);

// Exploration state owned by one training run.
struct EpsState {
    double eps = 1.0;
    long long steps_done = 0;
};

// Advances the schedule after an environment step: increments the global
// step counter and recomputes eps for the upcoming step. Passing the
// completed-step count makes eps exactly 0 from step n_train on; the
// as-printed recurrence leaves a ~4e-13 float residue there instead.
void advance_epsilon(const AgentConfig& cfg, EpsState& state);

inline constexpr int kNumActions = 11;
inline constexpr int kVoltageMin = -5;

// Action-value table over position bins x integer voltages [-5..5],
// zero-initialized.
class QTable {
public:
    explicit QTable(const QuantizationGrid& grid);

    const QuantizationGrid& grid() const { return grid_; }
    const std::vector<int>& actions() const { return actions_; }
    int num_bins() const { return num_bins_; }
    int num_actions() const { return static_cast<int>(actions_.size()); }
    double voltage(int action) const { return actions_[static_cast<std::size_t>(action)]; }

    double value(int bin, int action) const { return values_[index(bin, action)]; }
    double& value(int bin, int action) { return values_[index(bin, action)]; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

private:
    std::size_t index(int bin, int action) const;

    QuantizationGrid grid_;
    int num_bins_;
    std::vector<int> actions_;
    std::vector<double> values_;
};

// Lowest-index maximizer of Q(bin, .).
int greedy_action(const QTable& q, int bin);

// Epsilon-greedy selection. Draws u ~ Uniform(0,1) first; if u > eps the
// greedy action is returned, otherwise a second draw picks one of the 11
// actions uniformly. Exactly one or two draws, in that order.
int select_action(const QTable& q, int bin, double eps, RandomStream& rng);

// Q(bin,a) += zeta * (reward + gamma * B - Q(bin,a)), with B the best
// next-bin value, or 0 when the step ended the round.
void update(QTable& q, int bin, int action, double reward, int next_bin, bool terminal,
            const AgentConfig& cfg);

}  // namespace cartq

#endif  // CARTQ_AGENT_HPP
