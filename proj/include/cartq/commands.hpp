#ifndef CARTQ_COMMANDS_HPP
#define CARTQ_COMMANDS_HPP

#include <filesystem>
#include <vector>

#include <json.hpp>

namespace cartq {

// Each command resolves its configuration from a parsed --config file
// (null when absent) and a JSON object of values set by CLI flags, writes
// manifest.json into the output directory before any computation, then
// writes its artifacts and prints a one-line summary. Errors surface as
// exceptions with key-named messages.

struct TrainOptions {
    nlohmann::json file_values;
    nlohmann::json flag_overrides = nlohmann::json::object();
    std::filesystem::path out = "runs/train";
    bool save_trajectories = false;  // also write every training round under rounds/
};

struct EvalOptions {
    nlohmann::json file_values;
    nlohmann::json flag_overrides = nlohmann::json::object();
    std::filesystem::path qtable;
    std::filesystem::path out = "runs/eval";
};

struct BaselineOptions {
    nlohmann::json file_values;
    nlohmann::json flag_overrides = nlohmann::json::object();
    std::filesystem::path out = "runs/baseline";
};

struct RobustnessOptions {
    nlohmann::json file_values;
    nlohmann::json flag_overrides = nlohmann::json::object();
    std::filesystem::path qtable;
    double alpha_test = -1.01;
    std::filesystem::path out = "runs/robustness";
};

struct CompareOptions {
    std::vector<std::filesystem::path> runs;  // directories holding report.json
    std::filesystem::path out = "runs/compare";
};

// Trains one agent; writes curve.csv, qtable.json, eval.csv, report.json.
void cmd_train(const TrainOptions& opt);

// Greedy evaluation of a saved table; writes eval.csv and report.json.
void cmd_eval(const EvalOptions& opt);

// Proportional-controller rollout; writes trajectory.csv and report.json.
void cmd_baseline(const BaselineOptions& opt);

// Evaluates a saved table on the nominal and a perturbed plant; writes
// nominal.csv, perturbed.csv, and a report on the perturbed run carrying
// the divergence between the two.
void cmd_robustness(const RobustnessOptions& opt);

// Ranks prior runs by their reports; writes ranking.json.
void cmd_compare(const CompareOptions& opt);

}  // namespace cartq

#endif  // CARTQ_COMMANDS_HPP
