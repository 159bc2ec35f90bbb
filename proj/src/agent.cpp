#include "cartq/agent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cartq {

int QuantizationGrid::num_bins() const {
    return static_cast<int>(std::llround((x_max - x_min) / bin_width)) + 1;
}

int quantize(const QuantizationGrid& grid, double x) {
    if (x <= grid.x_min) return 0;
    const int last = grid.num_bins() - 1;
    if (x >= grid.x_max) return last;
    const int bin = static_cast<int>(std::floor((x - grid.x_min) * (1.0 / grid.bin_width)));
    return std::clamp(bin, 0, last);
}

double bin_center(const QuantizationGrid& grid, int bin) {
    return grid.x_min + (static_cast<double>(bin) + 0.5) * grid.bin_width;
}

double epsilon_step(const AgentConfig& cfg, double eps, long long t) {
    const long long n = cfg.n_train;
    const long long remaining = n - t;
    if (remaining <= 0) return 0.0;
    double next;
    if (10 * remaining > 7 * n || 10 * remaining <= 3 * n) {
        next = eps - cfg.epsilon0 / (3.0 * static_cast<double>(n));
    } else {
        next = eps - 2.0 * cfg.epsilon0 / static_cast<double>(n);
    }
    return std::clamp(next, 0.0, 1.0);
}

void advance_epsilon(const AgentConfig& cfg, EpsState& state) {
    state.steps_done += 1;
    state.eps = epsilon_step(cfg, state.eps, state.steps_done);
}

QTable::QTable(const QuantizationGrid& grid)
    : grid_(grid), num_bins_(grid.num_bins()) {
    if (num_bins_ < 1) throw std::invalid_argument("bin_width: grid has no bins");
    actions_.reserve(kNumActions);
    for (int v = kVoltageMin; v < kVoltageMin + kNumActions; ++v) actions_.push_back(v);
    values_.assign(static_cast<std::size_t>(num_bins_) * actions_.size(), 0.0);
}

std::size_t QTable::index(int bin, int action) const {
    return static_cast<std::size_t>(bin) * actions_.size() + static_cast<std::size_t>(action);
}

int greedy_action(const QTable& q, int bin) {
    int best = 0;
    double best_value = q.value(bin, 0);
    for (int a = 1; a < q.num_actions(); ++a) {
        const double v = q.value(bin, a);
        if (v > best_value) {
            best = a;
            best_value = v;
        }
    }
    return best;
}

int select_action(const QTable& q, int bin, double eps, RandomStream& rng) {
    const double u = rng.uniform01();
    if (u > eps) return greedy_action(q, bin);
    return rng.uniform_int(q.num_actions());
}

void update(QTable& q, int bin, int action, double reward, int next_bin, bool terminal,
            const AgentConfig& cfg) {
    const double bootstrap = terminal ? 0.0 : q.value(next_bin, greedy_action(q, next_bin));
    double& cell = q.value(bin, action);
    cell += cfg.zeta * (reward + cfg.gamma * bootstrap - cell);
}

}  // namespace cartq
