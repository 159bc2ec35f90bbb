#ifndef CARTQ_CONFIG_HPP
#define CARTQ_CONFIG_HPP

#include <json.hpp>

#include "cartq/baseline.hpp"
#include "cartq/trainer.hpp"

namespace cartq {

// Resolves a training configuration from a flat JSON object of file
// values and one of flag overrides: flags win over file values, file
// values win over defaults. Unknown keys, wrong value types, and
// out-of-range values raise std::invalid_argument naming the key. The
// plant may be given either as alpha/beta or as the nine motor-constant
// keys (all together); the two parameterizations are mutually exclusive.
// When dt is not given it defaults to 0.2, or 0.1 under the linear
// reward.
TrainConfig make_train_config(const nlohmann::json& file_values,
                              const nlohmann::json& flag_overrides);

// Same resolution scheme for the proportional-controller runs. The
// rollout horizon uses the key "steps" (default 100).
BaselineConfig make_baseline_config(const nlohmann::json& file_values,
                                    const nlohmann::json& flag_overrides);

void validate(const TrainConfig& cfg);
void validate(const BaselineConfig& cfg);

// Fully resolved flat form, suitable for a manifest: feeding it back
// through make_*_config reproduces the same configuration.
nlohmann::json to_json(const TrainConfig& cfg);
nlohmann::json to_json(const BaselineConfig& cfg);

}  // namespace cartq

#endif  // CARTQ_CONFIG_HPP
