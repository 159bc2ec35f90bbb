#include "cartq/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace cartq {

std::optional<int> settling_time(const Trajectory& traj, double lo, double hi) {
    if (traj.steps.empty()) return std::nullopt;
    int last_outside = -1;
    for (std::size_t i = 0; i < traj.steps.size(); ++i) {
        const double x = traj.steps[i].x;
        if (x < lo || x > hi) last_outside = static_cast<int>(i);
    }
    if (last_outside < 0) return 0;
    if (last_outside == static_cast<int>(traj.steps.size()) - 1) return std::nullopt;
    return last_outside + 1;
}

SteadyStateReport steady_state_report(const Trajectory& traj, const QuantizationGrid& grid,
                                      double r, int tail_window) {
    SteadyStateReport report;
    report.target = r;
    report.settle_step = settling_time(traj, r - 1.0, r + 1.0);
    if (report.settle_step) {
        report.settle_time = traj.steps[static_cast<std::size_t>(*report.settle_step)].t;
    }

    const std::size_t count = traj.steps.size();
    const std::size_t window = std::min<std::size_t>(count, static_cast<std::size_t>(tail_window));
    for (std::size_t i = count - window; i < count; ++i) {
        report.positions.push_back(bin_center(grid, quantize(grid, traj.steps[i].x)));
    }
    std::sort(report.positions.begin(), report.positions.end());
    report.positions.erase(std::unique(report.positions.begin(), report.positions.end()),
                           report.positions.end());

    if (!report.positions.empty()) {
        report.width = report.positions.back() - report.positions.front();
        const double half_bin = grid.bin_width / 2.0 + 1e-9;
        for (double p : report.positions) {
            if (std::abs(p - r) <= half_bin) {
                report.contains_target = true;
                break;
            }
        }
    }
    return report;
}

RobustnessResult robustness_run(const QTable& q, const TrainConfig& cfg, double alpha_test) {
    RobustnessResult result;
    result.nominal = evaluate(q, cfg);

    TrainConfig perturbed_cfg = cfg;
    perturbed_cfg.plant.alpha = alpha_test;
    result.perturbed = evaluate(q, perturbed_cfg);

    const std::size_t common =
        std::min(result.nominal.steps.size(), result.perturbed.steps.size());
    for (std::size_t i = 0; i < common; ++i) {
        result.divergence = std::max(
            result.divergence, std::abs(result.nominal.steps[i].x - result.perturbed.steps[i].x));
    }
    return result;
}

double peak_acceleration(const Trajectory& traj) {
    if (traj.steps.size() < 2) return 0.0;
    const double dt = traj.steps[1].t - traj.steps[0].t;
    double peak = 0.0;
    for (std::size_t i = 1; i < traj.steps.size(); ++i) {
        peak = std::max(peak, std::abs(traj.steps[i].s - traj.steps[i - 1].s) / dt);
    }
    return peak;
}

std::vector<std::size_t> compare_agents(const std::vector<SteadyStateReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("reports: must not be empty");

    const double inf = std::numeric_limits<double>::infinity();
    auto key = [&](std::size_t i) {
        const SteadyStateReport& rep = reports[i];
        const double settle = rep.settle_time ? *rep.settle_time : inf;
        double distance = inf;
        for (double p : rep.positions) distance = std::min(distance, std::abs(p - rep.target));
        return std::make_tuple(settle, rep.width, rep.contains_target ? 0 : 1, distance);
    };

    std::vector<std::size_t> order(reports.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    return order;
}

}  // namespace cartq
