#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cartq/commands.hpp"
#include "cartq/io.hpp"
#include "cartq/version.hpp"

namespace {

// Flags shared by the commands that resolve a training configuration.
// Only flags the user actually passed become overrides, so file values
// and defaults keep their precedence.
struct TrainFlagSet {
    std::string config_file;
    std::string reward;
    long long seed = 0;
    int tail_window = 0;

    CLI::Option* reward_opt = nullptr;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* tail_opt = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_file, "JSON configuration file")
            ->check(CLI::ExistingFile);
        reward_opt = cmd->add_option("--reward", reward, "Reward shape")
                         ->check(CLI::IsMember({"quadratic", "linear", "banded"}));
        seed_opt = cmd->add_option("--seed", seed, "PRNG seed (32-bit)");
        tail_opt = cmd->add_option("--tail-window", tail_window,
                                   "Records summarized by the steady-state report");
    }

    nlohmann::json file_values() const {
        return config_file.empty() ? nlohmann::json() : cartq::read_json_file(config_file);
    }

    nlohmann::json overrides() const {
        nlohmann::json j = nlohmann::json::object();
        if (reward_opt->count() > 0) j["reward"] = reward;
        if (seed_opt->count() > 0) j["seed"] = seed;
        if (tail_opt->count() > 0) j["tail_window"] = tail_window;
        return j;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cart-position control workbench: tabular Q-learning agents under three reward "
                 "shapes against a proportional baseline"};
    app.set_version_flag("--version", cartq::kToolVersion);
    app.require_subcommand(1);

    CLI::App* train_cmd = app.add_subcommand("train", "Train one agent and evaluate it greedily");
    TrainFlagSet train_flags;
    train_flags.attach(train_cmd);
    std::string train_out = "runs/train";
    bool save_trajectories = false;
    train_cmd->add_option("--out", train_out, "Output directory");
    train_cmd->add_flag("--save-trajectories", save_trajectories,
                        "Write every training round as CSV under rounds/");

    CLI::App* eval_cmd = app.add_subcommand("eval", "Greedy evaluation of a saved table");
    TrainFlagSet eval_flags;
    eval_flags.attach(eval_cmd);
    std::string eval_out = "runs/eval";
    std::string eval_qtable;
    eval_cmd->add_option("--qtable", eval_qtable, "Saved table (qtable.json)")
        ->required()
        ->check(CLI::ExistingFile);
    eval_cmd->add_option("--out", eval_out, "Output directory");

    CLI::App* baseline_cmd =
        app.add_subcommand("baseline", "Proportional-controller rollout and report");
    std::string baseline_config;
    std::string baseline_out = "runs/baseline";
    double kp = 0.0;
    long long steps = 0;
    int baseline_tail = 0;
    bool discretize = false;
    baseline_cmd->add_option("--config", baseline_config, "JSON configuration file")
        ->check(CLI::ExistingFile);
    CLI::Option* kp_opt = baseline_cmd->add_option("--kp", kp, "Proportional gain");
    CLI::Option* steps_opt = baseline_cmd->add_option("--steps", steps, "Rollout length");
    CLI::Option* baseline_tail_opt = baseline_cmd->add_option(
        "--tail-window", baseline_tail, "Records summarized by the steady-state report");
    CLI::Option* discretize_opt = baseline_cmd->add_flag(
        "--discretize", discretize, "Round voltages to the agent's integer action set");
    baseline_cmd->add_option("--out", baseline_out, "Output directory");

    CLI::App* robustness_cmd =
        app.add_subcommand("robustness", "Evaluate a saved table on a perturbed plant");
    TrainFlagSet robustness_flags;
    robustness_flags.attach(robustness_cmd);
    std::string robustness_out = "runs/robustness";
    std::string robustness_qtable;
    double alpha_test = -1.01;
    robustness_cmd->add_option("--qtable", robustness_qtable, "Saved table (qtable.json)")
        ->required()
        ->check(CLI::ExistingFile);
    robustness_cmd->add_option("--alpha-test", alpha_test,
                               "Velocity coefficient of the perturbed plant");
    robustness_cmd->add_option("--out", robustness_out, "Output directory");

    CLI::App* compare_cmd = app.add_subcommand("compare", "Rank prior runs by their reports");
    std::vector<std::string> compare_runs;
    std::string compare_out = "runs/compare";
    compare_cmd->add_option("runs", compare_runs, "Run directories holding report.json")
        ->required();
    compare_cmd->add_option("--out", compare_out, "Output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (train_cmd->parsed()) {
            cartq::TrainOptions opt;
            opt.file_values = train_flags.file_values();
            opt.flag_overrides = train_flags.overrides();
            opt.out = train_out;
            opt.save_trajectories = save_trajectories;
            cartq::cmd_train(opt);
        } else if (eval_cmd->parsed()) {
            cartq::EvalOptions opt;
            opt.file_values = eval_flags.file_values();
            opt.flag_overrides = eval_flags.overrides();
            opt.qtable = eval_qtable;
            opt.out = eval_out;
            cartq::cmd_eval(opt);
        } else if (baseline_cmd->parsed()) {
            cartq::BaselineOptions opt;
            opt.file_values = baseline_config.empty() ? nlohmann::json()
                                                      : cartq::read_json_file(baseline_config);
            opt.flag_overrides = nlohmann::json::object();
            if (kp_opt->count() > 0) opt.flag_overrides["kp"] = kp;
            if (steps_opt->count() > 0) opt.flag_overrides["steps"] = steps;
            if (baseline_tail_opt->count() > 0) opt.flag_overrides["tail_window"] = baseline_tail;
            if (discretize_opt->count() > 0) opt.flag_overrides["discretize"] = discretize;
            opt.out = baseline_out;
            cartq::cmd_baseline(opt);
        } else if (robustness_cmd->parsed()) {
            cartq::RobustnessOptions opt;
            opt.file_values = robustness_flags.file_values();
            opt.flag_overrides = robustness_flags.overrides();
            opt.qtable = robustness_qtable;
            opt.alpha_test = alpha_test;
            opt.out = robustness_out;
            cartq::cmd_robustness(opt);
        } else if (compare_cmd->parsed()) {
            cartq::CompareOptions opt;
            opt.runs.assign(compare_runs.begin(), compare_runs.end());
            opt.out = compare_out;
            cartq::cmd_compare(opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
