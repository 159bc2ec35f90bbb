#include <cmath>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "cartq/commands.hpp"
#include "cartq/config.hpp"
#include "cartq/io.hpp"
#include "temp_dir.hpp"

using namespace cartq;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const json kSmallTrain{{"samples", 2}, {"rounds_per_sample", 3}, {"seed", 5}};

}  // namespace

TEST_CASE("cmd_train writes the full artifact set and a reproducible manifest") {
    testutil::TempDir dir;
    TrainOptions opt;
    opt.file_values = kSmallTrain;
    opt.out = dir / "train_run";
    cmd_train(opt);

    for (const char* name : {"manifest.json", "curve.csv", "qtable.json", "eval.csv",
                             "report.json"}) {
        CHECK(fs::exists(opt.out / name));
    }
    CHECK_FALSE(fs::exists(opt.out / "rounds"));

    CHECK(read_curve_csv(opt.out / "curve.csv").size() == 2);

    const json manifest = read_json_file(opt.out / "manifest.json");
    CHECK(manifest.at("run_id") == "train_run");
    CHECK(manifest.at("command") == "train");
    CHECK(manifest.at("seed") == 5);
    CHECK(manifest.at("prng").at("algorithm") == "mt19937");
    CHECK(manifest.at("tool_version").is_string());
    for (const char* name : {"curve", "qtable", "eval", "report"}) {
        CHECK(manifest.at("artifacts").contains(name));
    }
    CHECK_FALSE(manifest.at("artifacts").contains("rounds"));

    // The recorded config is fully resolved: it reproduces itself.
    const json config = manifest.at("config");
    CHECK(to_json(make_train_config(config, json::object())) == config);
    CHECK(config.at("seed") == 5);
    CHECK(config.at("samples") == 2);
    CHECK(config.at("reward") == "banded");
}

TEST_CASE("cmd_train --save-trajectories records every training round") {
    testutil::TempDir dir;
    TrainOptions opt;
    opt.file_values = kSmallTrain;
    opt.out = dir / "train_run";
    opt.save_trajectories = true;
    cmd_train(opt);

    CHECK(read_json_file(opt.out / "manifest.json").at("artifacts").contains("rounds"));
    int files = 0;
    for (int k = 0; k < 2; ++k) {
        for (int j = 0; j < 3; ++j) {
            const fs::path p = opt.out / "rounds" /
                               ("sample_" + std::to_string(k) + "_round_" + std::to_string(j) +
                                ".csv");
            CHECK(fs::exists(p));
            ++files;
        }
    }
    CHECK(files == 6);
    const Trajectory round = read_trajectory_csv(opt.out / "rounds" / "sample_0_round_0.csv");
    CHECK(round.steps.size() >= 2);
}

TEST_CASE("cmd_eval reproduces the training rollout from the saved table") {
    testutil::TempDir dir;
    TrainOptions train_opt;
    train_opt.file_values = kSmallTrain;
    train_opt.out = dir / "train_run";
    cmd_train(train_opt);

    EvalOptions eval_opt;
    eval_opt.file_values = kSmallTrain;
    eval_opt.qtable = train_opt.out / "qtable.json";
    eval_opt.out = dir / "eval_run";
    cmd_eval(eval_opt);

    CHECK(testutil::slurp(eval_opt.out / "eval.csv") ==
          testutil::slurp(train_opt.out / "eval.csv"));
    const json manifest = read_json_file(eval_opt.out / "manifest.json");
    CHECK(manifest.at("command") == "eval");
    CHECK(manifest.at("qtable") == eval_opt.qtable.string());
}

TEST_CASE("cmd_eval rejects a table built on a different grid") {
    testutil::TempDir dir;
    TrainOptions train_opt;
    train_opt.file_values = kSmallTrain;
    train_opt.out = dir / "train_run";
    cmd_train(train_opt);

    EvalOptions eval_opt;
    eval_opt.file_values = kSmallTrain;
    eval_opt.flag_overrides = json{{"bin_width", 1.0}};
    eval_opt.qtable = train_opt.out / "qtable.json";
    eval_opt.out = dir / "eval_run";
    try {
        cmd_eval(eval_opt);
        FAIL("expected a grid mismatch error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("qtable") != std::string::npos);
    }
}

TEST_CASE("cmd_baseline writes the rollout and its report") {
    testutil::TempDir dir;
    BaselineOptions opt;
    opt.out = dir / "baseline_run";
    cmd_baseline(opt);

    const Trajectory traj = read_trajectory_csv(opt.out / "trajectory.csv");
    CHECK(traj.steps.size() == 101);
    const json report = read_json_file(opt.out / "report.json");
    CHECK(report.at("settle_step") == 36);
    CHECK(report.at("contains_target") == true);
    const json manifest = read_json_file(opt.out / "manifest.json");
    CHECK(manifest.at("command") == "baseline");
    CHECK(manifest.at("seed").is_null());
    CHECK_FALSE(manifest.contains("prng"));
    CHECK(manifest.at("config").at("kp") == 0.2);

    BaselineOptions quantized;
    quantized.flag_overrides = json{{"discretize", true}, {"kp", 0.1}};
    quantized.out = dir / "baseline_q";
    cmd_baseline(quantized);
    const Trajectory qtraj = read_trajectory_csv(quantized.out / "trajectory.csv");
    for (std::size_t i = 0; i + 1 < qtraj.steps.size(); ++i) {
        CHECK(qtraj.steps[i].V == std::floor(qtraj.steps[i].V));
    }
}

TEST_CASE("cmd_robustness reports the perturbed run and the divergence") {
    testutil::TempDir dir;
    TrainOptions train_opt;
    train_opt.file_values = kSmallTrain;
    train_opt.out = dir / "train_run";
    cmd_train(train_opt);

    RobustnessOptions opt;
    opt.file_values = kSmallTrain;
    opt.qtable = train_opt.out / "qtable.json";
    opt.alpha_test = -1.01;
    opt.out = dir / "robust_run";
    cmd_robustness(opt);

    CHECK(testutil::slurp(opt.out / "nominal.csv") ==
          testutil::slurp(train_opt.out / "eval.csv"));
    const json report = read_json_file(opt.out / "report.json");
    CHECK(report.at("divergence").get<double>() > 0.0);
    const json manifest = read_json_file(opt.out / "manifest.json");
    CHECK(manifest.at("alpha_test") == -1.01);

    RobustnessOptions same;
    same.file_values = kSmallTrain;
    same.qtable = train_opt.out / "qtable.json";
    same.alpha_test = -1.0;
    same.out = dir / "robust_same";
    cmd_robustness(same);
    CHECK(read_json_file(same.out / "report.json").at("divergence") == 0.0);
    CHECK(testutil::slurp(same.out / "nominal.csv") ==
          testutil::slurp(same.out / "perturbed.csv"));
}

TEST_CASE("cmd_compare ranks prior runs by their reports") {
    testutil::TempDir dir;

    RunReport fast_wide;
    fast_wide.steady_state.settle_step = 5;
    fast_wide.steady_state.settle_time = 1.0;
    fast_wide.steady_state.positions = {8.05, 10.05};
    fast_wide.steady_state.width = 2.0;
    fast_wide.steady_state.contains_target = true;
    fast_wide.steady_state.target = 10.0;

    RunReport fast_far = fast_wide;
    fast_far.steady_state.settle_step = 10;
    fast_far.steady_state.positions = {12.05, 17.05};
    fast_far.steady_state.width = 5.0;
    fast_far.steady_state.contains_target = false;

    RunReport best = fast_wide;
    best.steady_state.settle_step = 4;
    best.steady_state.settle_time = 0.8;
    best.steady_state.positions = {10.05};
    best.steady_state.width = 0.0;

    const std::vector<RunReport> reports{fast_wide, fast_far, best};
    CompareOptions opt;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const fs::path run_dir = dir / ("run" + std::to_string(i));
        fs::create_directories(run_dir);
        write_json_file(run_dir / "report.json", report_to_json(reports[i]));
        opt.runs.push_back(run_dir);
    }
    opt.out = dir / "compare";
    cmd_compare(opt);

    const json ranking = read_json_file(opt.out / "ranking.json").at("ranking");
    REQUIRE(ranking.size() == 3);
    CHECK(ranking[0].at("run") == opt.runs[2].string());
    CHECK(ranking[1].at("run") == opt.runs[0].string());
    CHECK(ranking[2].at("run") == opt.runs[1].string());
    CHECK(ranking[0].at("settle_time") == 0.8);
    CHECK(ranking[0].at("width") == 0.0);
    CHECK(ranking[0].at("contains_target") == true);

    const json manifest = read_json_file(opt.out / "manifest.json");
    CHECK(manifest.at("config").at("runs").size() == 3);

    CHECK_THROWS_AS(cmd_compare(CompareOptions{}), std::invalid_argument);
}

TEST_CASE("command configuration errors propagate with the key name") {
    testutil::TempDir dir;
    TrainOptions opt;
    opt.file_values = json{{"zoom", 1}};
    opt.out = dir / "bad";
    try {
        cmd_train(opt);
        FAIL("expected an unknown-key error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("zoom") != std::string::npos);
    }
}
