#include "cartq/trainer.hpp"

#include <utility>

#include "cartq/config.hpp"

namespace cartq {

Trajectory run_round(QTable& q, const TrainConfig& cfg, EpsState& eps, RandomStream& rng,
                     bool learning) {
    const QuantizationGrid grid = cfg.grid();
    const SimConfig& sim = cfg.sim;

    Trajectory traj;
    traj.steps.reserve(static_cast<std::size_t>(sim.max_steps) + 1);

    PlantState st{sim.x0, sim.s0};
    traj.steps.push_back({0.0, st.x, st.s, 0.0, 0.0});

    for (int k = 1; k <= sim.max_steps; ++k) {
        const int bin = quantize(grid, observe(st));
        const int action = learning ? select_action(q, bin, eps.eps, rng) : greedy_action(q, bin);
        const double voltage = q.voltage(action);
        traj.steps.back().V = voltage;

        st = euler_step(cfg.plant, st, voltage, sim.dt);
        const double rwd = reward(cfg.reward_kind, st.x, sim.r);
        const bool out_of_bounds = st.x < sim.x_min || st.x > sim.x_max;
        const bool terminal = out_of_bounds || k == sim.max_steps;

        if (learning) {
            update(q, bin, action, rwd, quantize(grid, st.x), terminal, cfg.agent);
            advance_epsilon(cfg.agent, eps);
        }

        traj.steps.push_back({static_cast<double>(k) * sim.dt, st.x, st.s, 0.0, rwd});
        if (out_of_bounds) {
            traj.terminated_out_of_bounds = true;
            break;
        }
    }
    return traj;
}

SampleResult run_sample(QTable& q, const TrainConfig& cfg, EpsState& eps, RandomStream& rng,
                        bool collect) {
    SampleResult result;
    double sum = 0.0;
    for (int round = 0; round < cfg.rounds_per_sample; ++round) {
        Trajectory traj = run_round(q, cfg, eps, rng, true);
        sum += traj.total_reward();
        if (collect) result.trajectories.push_back(std::move(traj));
    }
    result.mean_total_reward = sum / static_cast<double>(cfg.rounds_per_sample);
    return result;
}

Trajectory evaluate(const QTable& q, const TrainConfig& cfg) {
    QTable frozen = q;
    EpsState eps{0.0, 0};
    RandomStream rng(0);
    return run_round(frozen, cfg, eps, rng, false);
}

RunArtifacts train(const TrainConfig& cfg, bool collect_trajectories) {
    validate(cfg);

    QTable q(cfg.grid());
    RandomStream rng(cfg.seed);
    EpsState eps{cfg.agent.epsilon0, 0};

    std::vector<double> curve;
    curve.reserve(static_cast<std::size_t>(cfg.samples));
    std::vector<std::vector<Trajectory>> sample_trajectories;
    if (collect_trajectories) sample_trajectories.reserve(static_cast<std::size_t>(cfg.samples));

    for (int sample = 0; sample < cfg.samples; ++sample) {
        SampleResult result = run_sample(q, cfg, eps, rng, collect_trajectories);
        curve.push_back(result.mean_total_reward);
        if (collect_trajectories) sample_trajectories.push_back(std::move(result.trajectories));
    }

    Trajectory eval_trajectory = evaluate(q, cfg);
    return RunArtifacts{std::move(q), std::move(curve), std::move(sample_trajectories),
                        std::move(eval_trajectory)};
}

}  // namespace cartq
