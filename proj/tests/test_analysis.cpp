#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "cartq/agent.hpp"
#include "cartq/analysis.hpp"
#include "cartq/baseline.hpp"
#include "cartq/trainer.hpp"
#include "cartq/trajectory.hpp"

using namespace cartq;

namespace {

Trajectory make_traj(const std::vector<double>& xs, double dt = 0.2) {
    Trajectory traj;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        traj.steps.push_back({static_cast<double>(i) * dt, xs[i], 0.0, 0.0, 0.0});
    }
    return traj;
}

// Table whose greedy policy is the clamped, rounded proportional law.
QTable proportional_table(const TrainConfig& cfg, double kp) {
    QTable q(cfg.grid());
    for (int bin = 0; bin < q.num_bins(); ++bin) {
        const double v = kp * (cfg.sim.r - bin_center(cfg.grid(), bin));
        const int clamped = std::clamp(static_cast<int>(std::llround(v)), -5, 5);
        q.value(bin, clamped - kVoltageMin) = 1.0;
    }
    return q;
}

}  // namespace

TEST_CASE("settling_time finds the first permanently in-band step") {
    CHECK(settling_time(make_traj({10.0, 10.0, 10.0}), 9.0, 11.0) == 0);
    CHECK(settling_time(make_traj({0.0, 5.0, 9.5, 10.0, 10.2}), 9.0, 11.0) == 2);
    CHECK(settling_time(make_traj({0.0, 9.5, 10.0, 10.5, 9.8}), 9.0, 11.0) == 1);
    CHECK_FALSE(settling_time(make_traj({10.0, 10.0, 8.0}), 9.0, 11.0).has_value());
    CHECK_FALSE(settling_time(make_traj({0.0, -11.0}), 9.0, 11.0).has_value());
    // A re-entry after an excursion only counts from the excursion onwards.
    CHECK(settling_time(make_traj({9.5, 12.0, 10.0, 10.0}), 9.0, 11.0) == 2);
}

TEST_CASE("widening the band never delays settling") {
    BaselineConfig cfg;
    cfg.kp = 0.2;
    const Trajectory traj = simulate_baseline(cfg, 500);
    const auto narrow = settling_time(traj, 9.0, 11.0);
    const auto wide = settling_time(traj, 8.0, 12.0);
    REQUIRE(narrow.has_value());
    REQUIRE(wide.has_value());
    CHECK(*wide <= *narrow);
}

TEST_CASE("steady_state_report summarises the tail occupancy") {
    const QuantizationGrid grid;

    SUBCASE("alternating between two bins") {
        std::vector<double> xs;
        for (int i = 0; i < 24; ++i) {
            xs.push_back(i % 2 == 0 ? 10.0 : 8.0);
        }
        const SteadyStateReport rep = steady_state_report(make_traj(xs), grid, 10.0);
        REQUIRE(rep.positions.size() == 2);
        CHECK(std::abs(rep.positions[0] - 8.05) < 1e-9);
        CHECK(std::abs(rep.positions[1] - 10.05) < 1e-9);
        CHECK(std::abs(rep.width - 2.0) < 1e-9);
        CHECK(rep.contains_target);
        CHECK(rep.target == 10.0);
        // 8.0 is outside [9,11] and keeps recurring, so there is no settle step.
        CHECK_FALSE(rep.settle_step.has_value());
        CHECK_FALSE(rep.settle_time.has_value());
    }

    SUBCASE("resting exactly on the target") {
        const SteadyStateReport rep =
            steady_state_report(make_traj(std::vector<double>(30, 10.0)), grid, 10.0);
        REQUIRE(rep.positions.size() == 1);
        CHECK(std::abs(rep.positions[0] - 10.05) < 1e-9);
        CHECK(rep.width == 0.0);
        CHECK(rep.contains_target);
        CHECK(rep.settle_step == 0);
        CHECK(rep.settle_time == 0.0);
    }

    SUBCASE("limit cycle away from the target") {
        std::vector<double> xs;
        for (int i = 0; i < 21; ++i) {
            xs.push_back(12.0 + (i % 3));  // 12, 13, 14
        }
        xs.push_back(17.0);
        const SteadyStateReport rep = steady_state_report(make_traj(xs), grid, 10.0);
        REQUIRE(rep.positions.size() == 4);
        CHECK(std::abs(rep.width - 5.0) < 1e-9);
        CHECK_FALSE(rep.contains_target);
    }

    SUBCASE("settle step and time from a converging run") {
        const SteadyStateReport rep =
            steady_state_report(make_traj({0.0, 5.0, 9.5, 10.0, 10.2}), grid, 10.0);
        CHECK(rep.settle_step == 2);
        REQUIRE(rep.settle_time.has_value());
        CHECK(std::abs(*rep.settle_time - 0.4) < 1e-12);
        CHECK(rep.positions.size() == 5);  // shorter than the window, all records used
        CHECK(std::abs(rep.width - 10.2) < 1e-9);
    }

    SUBCASE("window restricts to the last records") {
        const SteadyStateReport rep =
            steady_state_report(make_traj({0.0, 5.0, 9.5, 10.0, 10.2}), grid, 10.0, 3);
        REQUIRE(rep.positions.size() == 3);
        CHECK(std::abs(rep.positions.front() - 9.55) < 1e-9);
        CHECK(std::abs(rep.width - 0.7) < 1e-9);
    }
}

TEST_CASE("tail occupancy ignores visit order and multiplicity") {
    const QuantizationGrid grid;
    const SteadyStateReport a =
        steady_state_report(make_traj({9.0, 10.0, 9.0, 10.0, 9.0, 10.0}), grid, 10.0);
    const SteadyStateReport b =
        steady_state_report(make_traj({10.0, 10.0, 10.0, 9.0, 9.0, 10.0}), grid, 10.0);
    CHECK(a.positions == b.positions);
    CHECK(a.width == b.width);
    CHECK(a.contains_target == b.contains_target);
}

TEST_CASE("peak_acceleration is the largest velocity change per unit time") {
    CHECK(peak_acceleration(Trajectory{}) == 0.0);
    CHECK(peak_acceleration(make_traj({5.0})) == 0.0);

    Trajectory coasting;
    for (int i = 0; i < 5; ++i) {
        coasting.steps.push_back({i * 0.2, i * 0.4, 2.0, 0.0, 0.0});
    }
    CHECK(peak_acceleration(coasting) == 0.0);

    Trajectory jump;
    jump.steps.push_back({0.0, 0.0, 0.0, 0.0, 0.0});
    jump.steps.push_back({0.2, 0.0, 10.0, 0.0, 0.0});
    CHECK(std::abs(peak_acceleration(jump) - 50.0) < 1e-9);

    BaselineConfig cfg;
    const Trajectory traj = simulate_baseline(cfg, 500);
    double max_speed = 0.0;
    for (const TrajectoryStep& st : traj.steps) {
        max_speed = std::max(max_speed, std::abs(st.s));
    }
    const double peak = peak_acceleration(traj);
    // First transition: s goes from 0 to dt * beta * V0 = 4, so 4 / 0.2.
    CHECK(peak >= 20.0 - 1e-9);
    CHECK(peak <= cfg.plant.beta * 5.0 + std::abs(cfg.plant.alpha) * max_speed + 1e-9);
}

TEST_CASE("robustness_run compares greedy rollouts across plant variants") {
    TrainConfig cfg;
    const QTable q = proportional_table(cfg, 0.2);

    SUBCASE("identical plant gives exactly zero divergence") {
        const RobustnessResult res = robustness_run(q, cfg, cfg.plant.alpha);
        CHECK(res.divergence == 0.0);
        REQUIRE(res.nominal.steps.size() == res.perturbed.steps.size());
        for (std::size_t i = 0; i < res.nominal.steps.size(); ++i) {
            CHECK(res.nominal.steps[i].x == res.perturbed.steps[i].x);
            CHECK(res.nominal.steps[i].s == res.perturbed.steps[i].s);
        }
    }

    SUBCASE("a one-percent friction change registers but stays small") {
        const RobustnessResult res = robustness_run(q, cfg, -1.01);
        CHECK(res.divergence > 0.0);
        CHECK(res.divergence < 1.0);
    }

    SUBCASE("divergence is defined even when both rollouts exit the track") {
        const QTable zeros(cfg.grid());
        const RobustnessResult res = robustness_run(zeros, cfg, -1.01);
        CHECK(res.nominal.terminated_out_of_bounds);
        CHECK(res.perturbed.terminated_out_of_bounds);
        CHECK(res.divergence > 0.0);
    }
}

TEST_CASE("compare_agents ranks by settle time, then width, then proximity") {
    SteadyStateReport fast_wide;
    fast_wide.settle_step = 5;
    fast_wide.settle_time = 1.0;
    fast_wide.positions = {8.05, 10.05};
    fast_wide.width = 2.0;
    fast_wide.contains_target = true;
    fast_wide.target = 10.0;

    SteadyStateReport fast_far;
    fast_far.settle_step = 10;
    fast_far.settle_time = 1.0;  // finer step, same wall-clock settle
    fast_far.positions = {12.05, 17.05};
    fast_far.width = 5.0;
    fast_far.contains_target = false;
    fast_far.target = 10.0;

    SteadyStateReport best;
    best.settle_step = 4;
    best.settle_time = 0.8;
    best.positions = {10.05};
    best.width = 0.0;
    best.contains_target = true;
    best.target = 10.0;

    const std::vector<SteadyStateReport> reports{fast_wide, fast_far, best};
    const std::vector<std::size_t> order = compare_agents(reports);
    REQUIRE(order.size() == 3);
    CHECK(order[0] == 2);
    CHECK(order[1] == 0);
    CHECK(order[2] == 1);

    CHECK(compare_agents({best}) == std::vector<std::size_t>{0});
    CHECK(compare_agents({fast_wide, fast_wide}) == std::vector<std::size_t>{0, 1});

    SteadyStateReport never;
    never.positions = {0.05};
    never.width = 0.0;
    never.contains_target = false;
    never.target = 10.0;
    const std::vector<std::size_t> with_never = compare_agents({never, best});
    CHECK(with_never.front() == 1);
    CHECK(with_never.back() == 0);

    CHECK_THROWS_AS(compare_agents({}), std::invalid_argument);
}
