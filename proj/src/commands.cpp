#include "cartq/commands.hpp"

#include <cstddef>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cartq/analysis.hpp"
#include "cartq/baseline.hpp"
#include "cartq/config.hpp"
#include "cartq/io.hpp"
#include "cartq/trainer.hpp"
#include "cartq/version.hpp"

namespace cartq {

namespace {

std::string run_id_from(const std::filesystem::path& out) {
    const std::filesystem::path normal = out.lexically_normal();
    std::string id = normal.filename().string();
    if (id.empty() || id == ".") id = normal.parent_path().filename().string();
    if (id.empty()) id = normal.string();
    return id;
}

// Enough for another implementation to reproduce every draw.
nlohmann::json prng_description() {
    return {{"algorithm", "mt19937"},
            {"seed_rule", "std::mt19937(seed)"},
            {"uniform01", "next_u32 * 2^-32"},
            {"uniform_int", "(next_u32 * n) >> 32"}};
}

nlohmann::json make_manifest(const char* command, const std::filesystem::path& out,
                             const nlohmann::json& config, const nlohmann::json& artifacts) {
    nlohmann::json manifest{{"run_id", run_id_from(out)},
                            {"command", command},
                            {"config", config},
                            {"artifacts", artifacts},
                            {"tool_version", kToolVersion}};
    if (config.contains("seed")) {
        manifest["seed"] = config.at("seed");
        manifest["prng"] = prng_description();
    } else {
        manifest["seed"] = nullptr;
    }
    return manifest;
}

void write_manifest(const std::filesystem::path& out, const nlohmann::json& manifest) {
    std::filesystem::create_directories(out);
    write_json_file(out / "manifest.json", manifest);
}

RunReport run_report_for(const Trajectory& traj, const QuantizationGrid& grid, double r,
                         int tail_window) {
    RunReport report;
    report.steady_state = steady_state_report(traj, grid, r, tail_window);
    report.peak_acceleration = peak_acceleration(traj);
    return report;
}

std::string describe_settle(const RunReport& report) {
    if (!report.steady_state.settle_step) return "never settles";
    return "settles at step " + std::to_string(*report.steady_state.settle_step);
}

void check_grid_match(const QTable& q, const QuantizationGrid& grid) {
    const QuantizationGrid& g = q.grid();
    if (g.x_min != grid.x_min || g.x_max != grid.x_max || g.bin_width != grid.bin_width) {
        throw std::invalid_argument("qtable: grid does not match the configuration");
    }
}

}  // namespace

void cmd_train(const TrainOptions& opt) {
    const TrainConfig cfg = make_train_config(opt.file_values, opt.flag_overrides);

    nlohmann::json artifacts{{"curve", "curve.csv"},
                             {"qtable", "qtable.json"},
                             {"eval", "eval.csv"},
                             {"report", "report.json"}};
    if (opt.save_trajectories) artifacts["rounds"] = "rounds/sample_{k}_round_{j}.csv";
    write_manifest(opt.out, make_manifest("train", opt.out, to_json(cfg), artifacts));

    const RunArtifacts run = train(cfg, opt.save_trajectories);

    write_curve_csv(opt.out / "curve.csv", run.curve);
    save_qtable(opt.out / "qtable.json", run.qtable);
    write_trajectory_csv(opt.out / "eval.csv", run.eval_trajectory);
    const RunReport report =
        run_report_for(run.eval_trajectory, cfg.grid(), cfg.sim.r, cfg.tail_window);
    write_json_file(opt.out / "report.json", report_to_json(report));

    if (opt.save_trajectories) {
        const std::filesystem::path rounds_dir = opt.out / "rounds";
        std::filesystem::create_directories(rounds_dir);
        for (std::size_t k = 0; k < run.sample_trajectories.size(); ++k) {
            for (std::size_t j = 0; j < run.sample_trajectories[k].size(); ++j) {
                write_trajectory_csv(rounds_dir / ("sample_" + std::to_string(k) + "_round_" +
                                                   std::to_string(j) + ".csv"),
                                     run.sample_trajectories[k][j]);
            }
        }
    }

    std::cout << "train " << run_id_from(opt.out) << ": reward " << to_string(cfg.reward_kind)
              << ", seed " << cfg.seed << ", final mean total reward "
              << format_double(run.curve.back()) << ", eval " << describe_settle(report)
              << "; wrote " << opt.out.string() << "\n";
}

void cmd_eval(const EvalOptions& opt) {
    const TrainConfig cfg = make_train_config(opt.file_values, opt.flag_overrides);
    const QTable q = load_qtable(opt.qtable);
    check_grid_match(q, cfg.grid());

    nlohmann::json manifest =
        make_manifest("eval", opt.out, to_json(cfg),
                      nlohmann::json{{"eval", "eval.csv"}, {"report", "report.json"}});
    manifest["qtable"] = opt.qtable.string();
    write_manifest(opt.out, manifest);

    const Trajectory traj = evaluate(q, cfg);
    write_trajectory_csv(opt.out / "eval.csv", traj);
    const RunReport report = run_report_for(traj, cfg.grid(), cfg.sim.r, cfg.tail_window);
    write_json_file(opt.out / "report.json", report_to_json(report));

    std::cout << "eval " << run_id_from(opt.out) << ": " << describe_settle(report) << ", width "
              << format_double(report.steady_state.width) << "; wrote " << opt.out.string()
              << "\n";
}

void cmd_baseline(const BaselineOptions& opt) {
    const BaselineConfig cfg = make_baseline_config(opt.file_values, opt.flag_overrides);
    write_manifest(opt.out,
                   make_manifest("baseline", opt.out, to_json(cfg),
                                 nlohmann::json{{"trajectory", "trajectory.csv"},
                                                {"report", "report.json"}}));

    const Trajectory traj = simulate_baseline(cfg, cfg.sim.max_steps, cfg.discretize);
    write_trajectory_csv(opt.out / "trajectory.csv", traj);
    const QuantizationGrid grid{cfg.sim.x_min, cfg.sim.x_max, cfg.bin_width};
    const RunReport report = run_report_for(traj, grid, cfg.sim.r, cfg.tail_window);
    write_json_file(opt.out / "report.json", report_to_json(report));

    const EigenPair eig = closed_loop_eigenvalues(cfg.plant, cfg.kp);
    const std::string stability =
        is_hurwitz(eig)
            ? "stable, steady state " +
                  format_double(steady_state_prediction(cfg.plant, cfg.kp, cfg.sim.r))
            : "not Hurwitz";
    std::cout << "baseline " << run_id_from(opt.out) << ": kp " << format_double(cfg.kp) << ", "
              << stability << ", " << describe_settle(report) << "; wrote " << opt.out.string()
              << "\n";
}

void cmd_robustness(const RobustnessOptions& opt) {
    const TrainConfig cfg = make_train_config(opt.file_values, opt.flag_overrides);
    const QTable q = load_qtable(opt.qtable);
    check_grid_match(q, cfg.grid());

    nlohmann::json manifest = make_manifest("robustness", opt.out, to_json(cfg),
                                            nlohmann::json{{"nominal", "nominal.csv"},
                                                           {"perturbed", "perturbed.csv"},
                                                           {"report", "report.json"}});
    manifest["qtable"] = opt.qtable.string();
    manifest["alpha_test"] = opt.alpha_test;
    write_manifest(opt.out, manifest);

    const RobustnessResult result = robustness_run(q, cfg, opt.alpha_test);
    write_trajectory_csv(opt.out / "nominal.csv", result.nominal);
    write_trajectory_csv(opt.out / "perturbed.csv", result.perturbed);
    RunReport report = run_report_for(result.perturbed, cfg.grid(), cfg.sim.r, cfg.tail_window);
    report.divergence = result.divergence;
    write_json_file(opt.out / "report.json", report_to_json(report));

    std::cout << "robustness " << run_id_from(opt.out) << ": alpha "
              << format_double(cfg.plant.alpha) << " vs " << format_double(opt.alpha_test)
              << ", divergence " << format_double(result.divergence) << "; wrote "
              << opt.out.string() << "\n";
}

void cmd_compare(const CompareOptions& opt) {
    if (opt.runs.empty()) {
        throw std::invalid_argument("runs: at least one run directory is required");
    }

    std::vector<SteadyStateReport> steady;
    steady.reserve(opt.runs.size());
    for (const std::filesystem::path& dir : opt.runs) {
        steady.push_back(report_from_json(read_json_file(dir / "report.json")).steady_state);
    }

    nlohmann::json runs_json = nlohmann::json::array();
    for (const std::filesystem::path& dir : opt.runs) runs_json.push_back(dir.string());
    write_manifest(opt.out, make_manifest("compare", opt.out,
                                          nlohmann::json{{"runs", runs_json}},
                                          nlohmann::json{{"ranking", "ranking.json"}}));

    const std::vector<std::size_t> order = compare_agents(steady);
    nlohmann::json ranking = nlohmann::json::array();
    for (std::size_t idx : order) {
        const SteadyStateReport& ss = steady[idx];
        ranking.push_back(nlohmann::json{
            {"run", opt.runs[idx].string()},
            {"settle_time",
             ss.settle_time ? nlohmann::json(*ss.settle_time) : nlohmann::json(nullptr)},
            {"width", ss.width},
            {"contains_target", ss.contains_target}});
    }
    write_json_file(opt.out / "ranking.json", nlohmann::json{{"ranking", std::move(ranking)}});

    std::cout << "compare " << run_id_from(opt.out) << ": best " << opt.runs[order[0]].string()
              << " of " << opt.runs.size() << " runs; wrote " << opt.out.string() << "\n";
}

}  // namespace cartq
