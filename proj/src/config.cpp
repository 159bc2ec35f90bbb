#include "cartq/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>

namespace cartq {

namespace {

using nlohmann::json;

constexpr std::array<const char*, 9> kMotorKeys = {"eta_g", "K_g", "eta_m", "K_t", "r_mp",
                                                   "K_m",   "R_m", "nu",    "M"};

json merged_values(const json& file_values, const json& flag_overrides) {
    json merged = json::object();
    for (const json* source : {&file_values, &flag_overrides}) {
        if (source->is_null()) continue;
        if (!source->is_object()) throw std::invalid_argument("config: expected a JSON object");
        for (const auto& [key, value] : source->items()) merged[key] = value;
    }
    return merged;
}

void reject_unknown_keys(const json& merged, std::initializer_list<const char*> known) {
    for (const auto& [key, value] : merged.items()) {
        (void)value;
        const bool recognized = std::any_of(known.begin(), known.end(),
                                            [&](const char* k) { return key == k; });
        if (!recognized) throw std::invalid_argument(key + ": unknown configuration key");
    }
}

double get_double(const json& merged, const char* key, double fallback) {
    if (!merged.contains(key)) return fallback;
    const json& value = merged.at(key);
    if (!value.is_number()) throw std::invalid_argument(std::string(key) + ": must be a number");
    return value.get<double>();
}

long long get_integer(const json& merged, const char* key, long long fallback) {
    if (!merged.contains(key)) return fallback;
    const json& value = merged.at(key);
    if (!value.is_number_integer()) {
        throw std::invalid_argument(std::string(key) + ": must be an integer");
    }
    return value.get<long long>();
}

int get_count(const json& merged, const char* key, int fallback) {
    const long long value = get_integer(merged, key, fallback);
    if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
        throw std::invalid_argument(std::string(key) + ": out of range");
    }
    return static_cast<int>(value);
}

bool get_bool(const json& merged, const char* key, bool fallback) {
    if (!merged.contains(key)) return fallback;
    const json& value = merged.at(key);
    if (!value.is_boolean()) throw std::invalid_argument(std::string(key) + ": must be a boolean");
    return value.get<bool>();
}

PlantParams resolve_plant(const json& merged, const PlantParams& fallback) {
    int present = 0;
    const char* first_missing = nullptr;
    for (const char* key : kMotorKeys) {
        if (merged.contains(key)) {
            ++present;
        } else if (first_missing == nullptr) {
            first_missing = key;
        }
    }
    if (present == 0) {
        return {get_double(merged, "alpha", fallback.alpha),
                get_double(merged, "beta", fallback.beta)};
    }
    if (present < static_cast<int>(kMotorKeys.size())) {
        throw std::invalid_argument(std::string(first_missing) +
                                    ": required when any motor-constant key is given");
    }
    for (const char* key : {"alpha", "beta"}) {
        if (merged.contains(key)) {
            throw std::invalid_argument(std::string(key) + ": conflicts with motor-constant keys");
        }
    }
    MotorConstants mc;
    mc.eta_g = get_double(merged, "eta_g", 0.0);
    mc.K_g = get_double(merged, "K_g", 0.0);
    mc.eta_m = get_double(merged, "eta_m", 0.0);
    mc.K_t = get_double(merged, "K_t", 0.0);
    mc.r_mp = get_double(merged, "r_mp", 0.0);
    mc.K_m = get_double(merged, "K_m", 0.0);
    mc.R_m = get_double(merged, "R_m", 0.0);
    mc.nu = get_double(merged, "nu", 0.0);
    mc.M = get_double(merged, "M", 0.0);
    return derive_params(mc);
}

RewardKind resolve_reward(const json& merged, RewardKind fallback) {
    if (!merged.contains("reward")) return fallback;
    const json& value = merged.at("reward");
    if (!value.is_string()) throw std::invalid_argument("reward: must be a string");
    return reward_kind_from_string(value.get<std::string>());
}

std::uint32_t resolve_seed(const json& merged, std::uint32_t fallback) {
    const long long seed = get_integer(merged, "seed", static_cast<long long>(fallback));
    if (seed < 0 || seed > 0xFFFFFFFFLL) {
        throw std::invalid_argument("seed: must fit in 32 bits");
    }
    return static_cast<std::uint32_t>(seed);
}

void validate_grid(const SimConfig& sim, double bin_width) {
    if (!(sim.dt > 0.0)) throw std::invalid_argument("dt: must be > 0");
    if (!(sim.x_min < sim.x_max)) throw std::invalid_argument("x_min: must be < x_max");
    if (!(bin_width > 0.0)) throw std::invalid_argument("bin_width: must be > 0");
    const double spans = (sim.x_max - sim.x_min) / bin_width;
    if (std::abs(spans - std::round(spans)) > 1e-9) {
        throw std::invalid_argument("bin_width: must evenly divide x_max - x_min");
    }
}

}  // namespace

TrainConfig make_train_config(const nlohmann::json& file_values,
                              const nlohmann::json& flag_overrides) {
    const json merged = merged_values(file_values, flag_overrides);
    reject_unknown_keys(merged, {"alpha", "beta", "eta_g", "K_g", "eta_m", "K_t", "r_mp", "K_m",
                                 "R_m", "nu", "M", "r", "dt", "x_min", "x_max", "x0", "s0",
                                 "max_steps", "zeta", "gamma", "epsilon0", "n_train", "samples",
                                 "rounds_per_sample", "bin_width", "reward", "seed",
                                 "tail_window"});

    TrainConfig cfg;
    cfg.plant = resolve_plant(merged, cfg.plant);
    cfg.reward_kind = resolve_reward(merged, cfg.reward_kind);
    cfg.sim.r = get_double(merged, "r", cfg.sim.r);
    cfg.sim.dt = get_double(merged, "dt",
                            cfg.reward_kind == RewardKind::PiecewiseLinear ? 0.1 : cfg.sim.dt);
    cfg.sim.x_min = get_double(merged, "x_min", cfg.sim.x_min);
    cfg.sim.x_max = get_double(merged, "x_max", cfg.sim.x_max);
    cfg.sim.x0 = get_double(merged, "x0", cfg.sim.x0);
    cfg.sim.s0 = get_double(merged, "s0", cfg.sim.s0);
    cfg.sim.max_steps = get_count(merged, "max_steps", cfg.sim.max_steps);
    cfg.agent.zeta = get_double(merged, "zeta", cfg.agent.zeta);
    cfg.agent.gamma = get_double(merged, "gamma", cfg.agent.gamma);
    cfg.agent.epsilon0 = get_double(merged, "epsilon0", cfg.agent.epsilon0);
    cfg.agent.n_train = get_integer(merged, "n_train", cfg.agent.n_train);
    cfg.samples = get_count(merged, "samples", cfg.samples);
    cfg.rounds_per_sample = get_count(merged, "rounds_per_sample", cfg.rounds_per_sample);
    cfg.bin_width = get_double(merged, "bin_width", cfg.bin_width);
    cfg.seed = resolve_seed(merged, cfg.seed);
    cfg.tail_window = get_count(merged, "tail_window", cfg.tail_window);
    validate(cfg);
    return cfg;
}

BaselineConfig make_baseline_config(const nlohmann::json& file_values,
                                    const nlohmann::json& flag_overrides) {
    const json merged = merged_values(file_values, flag_overrides);
    reject_unknown_keys(merged, {"kp", "alpha", "beta", "eta_g", "K_g", "eta_m", "K_t", "r_mp",
                                 "K_m", "R_m", "nu", "M", "r", "dt", "x_min", "x_max", "x0", "s0",
                                 "steps", "bin_width", "tail_window", "discretize"});

    BaselineConfig cfg;
    cfg.kp = get_double(merged, "kp", cfg.kp);
    cfg.plant = resolve_plant(merged, cfg.plant);
    cfg.sim.r = get_double(merged, "r", cfg.sim.r);
    cfg.sim.dt = get_double(merged, "dt", cfg.sim.dt);
    cfg.sim.x_min = get_double(merged, "x_min", cfg.sim.x_min);
    cfg.sim.x_max = get_double(merged, "x_max", cfg.sim.x_max);
    cfg.sim.x0 = get_double(merged, "x0", cfg.sim.x0);
    cfg.sim.s0 = get_double(merged, "s0", cfg.sim.s0);
    cfg.sim.max_steps = get_count(merged, "steps", 100);
    cfg.bin_width = get_double(merged, "bin_width", cfg.bin_width);
    cfg.tail_window = get_count(merged, "tail_window", cfg.tail_window);
    cfg.discretize = get_bool(merged, "discretize", cfg.discretize);
    validate(cfg);
    return cfg;
}

void validate(const TrainConfig& cfg) {
    validate_grid(cfg.sim, cfg.bin_width);
    if (cfg.sim.max_steps < 1) throw std::invalid_argument("max_steps: must be >= 1");
    if (cfg.samples < 1) throw std::invalid_argument("samples: must be >= 1");
    if (cfg.rounds_per_sample < 1) throw std::invalid_argument("rounds_per_sample: must be >= 1");
    if (cfg.agent.n_train < 1) throw std::invalid_argument("n_train: must be >= 1");
    if (cfg.tail_window < 1) throw std::invalid_argument("tail_window: must be >= 1");
    if (!(cfg.agent.zeta > 0.0 && cfg.agent.zeta <= 1.0)) {
        throw std::invalid_argument("zeta: must be in (0, 1]");
    }
    if (!(cfg.agent.gamma >= 0.0 && cfg.agent.gamma < 1.0)) {
        throw std::invalid_argument("gamma: must be in [0, 1)");
    }
    if (!(cfg.agent.epsilon0 >= 0.0 && cfg.agent.epsilon0 <= 1.0)) {
        throw std::invalid_argument("epsilon0: must be in [0, 1]");
    }
}

void validate(const BaselineConfig& cfg) {
    validate_grid(cfg.sim, cfg.bin_width);
    if (cfg.sim.max_steps < 1) throw std::invalid_argument("steps: must be >= 1");
    if (cfg.tail_window < 1) throw std::invalid_argument("tail_window: must be >= 1");
}

nlohmann::json to_json(const TrainConfig& cfg) {
    return nlohmann::json{{"alpha", cfg.plant.alpha},
                          {"beta", cfg.plant.beta},
                          {"r", cfg.sim.r},
                          {"dt", cfg.sim.dt},
                          {"x_min", cfg.sim.x_min},
                          {"x_max", cfg.sim.x_max},
                          {"x0", cfg.sim.x0},
                          {"s0", cfg.sim.s0},
                          {"max_steps", cfg.sim.max_steps},
                          {"zeta", cfg.agent.zeta},
                          {"gamma", cfg.agent.gamma},
                          {"epsilon0", cfg.agent.epsilon0},
                          {"n_train", cfg.agent.n_train},
                          {"samples", cfg.samples},
                          {"rounds_per_sample", cfg.rounds_per_sample},
                          {"bin_width", cfg.bin_width},
                          {"reward", to_string(cfg.reward_kind)},
                          {"seed", cfg.seed},
                          {"tail_window", cfg.tail_window}};
}

nlohmann::json to_json(const BaselineConfig& cfg) {
    return nlohmann::json{{"kp", cfg.kp},
                          {"alpha", cfg.plant.alpha},
                          {"beta", cfg.plant.beta},
                          {"r", cfg.sim.r},
                          {"dt", cfg.sim.dt},
                          {"x_min", cfg.sim.x_min},
                          {"x_max", cfg.sim.x_max},
                          {"x0", cfg.sim.x0},
                          {"s0", cfg.sim.s0},
                          {"steps", cfg.sim.max_steps},
                          {"bin_width", cfg.bin_width},
                          {"tail_window", cfg.tail_window},
                          {"discretize", cfg.discretize}};
}

}  // namespace cartq
