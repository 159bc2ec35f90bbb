#ifndef CARTQ_TRAJECTORY_HPP
#define CARTQ_TRAJECTORY_HPP

#include <cstddef>
#include <vector>

namespace cartq {

// One record per visited state. V is the voltage applied while leaving
// this state (0 on the last record, where no action is taken); reward is
// the reward collected on arrival at this state (0 on the first record).
struct TrajectoryStep {
    double t = 0.0;
    double x = 0.0;
    double s = 0.0;
    double V = 0.0;
    double reward = 0.0;
};

struct Trajectory {
    std::vector<TrajectoryStep> steps;
    bool terminated_out_of_bounds = false;

    // Number of environment transitions, one fewer than the record count.
    std::size_t steps_taken() const {
        return steps.empty() ? 0 : steps.size() - 1;
    }

    double total_reward() const {
        double sum = 0.0;
        for (std::size_t i = 1; i < steps.size(); ++i) sum += steps[i].reward;
        return sum;
    }
};

}  // namespace cartq

#endif  // CARTQ_TRAJECTORY_HPP
