#ifndef CARTQ_ANALYSIS_HPP
#define CARTQ_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cartq/agent.hpp"
#include "cartq/trainer.hpp"
#include "cartq/trajectory.hpp"

namespace cartq {

// Steady-state summary of one trajectory. Positions are the distinct bin
// centers occupied over the report's tail window, sorted ascending.
struct SteadyStateReport {
    std::optional<int> settle_step;
    std::optional<double> settle_time;  // seconds, settle_step * dt
    std::vector<double> positions;
    double width = 0.0;                 // max - min of positions
    bool contains_target = false;       // some position within half a bin of target
    double target = 0.0;
};

// Smallest step index k such that every position at step >= k lies in
// [lo, hi]; nullopt when the trajectory never permanently enters the band.
std::optional<int> settling_time(const Trajectory& traj, double lo, double hi);

// Settle step against [r-1, r+1] plus occupancy of the final tail_window
// records, read on the quantization grid. Shorter trajectories use all
// available records.
SteadyStateReport steady_state_report(const Trajectory& traj, const QuantizationGrid& grid,
                                      double r, int tail_window = 20);

struct RobustnessResult {
    Trajectory nominal;
    Trajectory perturbed;
    double divergence = 0.0;  // max |x_nominal - x_perturbed| over common steps
};

// Greedy evaluation of one table on the configured plant and on a copy
// with alpha swapped for alpha_test. Both rollouts are deterministic, so
// divergence is exactly 0 iff alpha_test equals the nominal alpha.
RobustnessResult robustness_run(const QTable& q, const TrainConfig& cfg, double alpha_test);

// Max over transitions of |delta s| / dt, with dt taken from the record
// spacing. Trajectories with fewer than two records report 0.
double peak_acceleration(const Trajectory& traj);

// Rank order (indices into reports, best first) by: earliest settle time
// with never-settling last, then smallest width, then contains_target,
// then smallest distance from any occupied position to the target. Ties
// preserve input order. Rejects an empty list.
std::vector<std::size_t> compare_agents(const std::vector<SteadyStateReport>& reports);

}  // namespace cartq

#endif  // CARTQ_ANALYSIS_HPP
