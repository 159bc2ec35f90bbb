#ifndef CARTQ_IO_HPP
#define CARTQ_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cartq/agent.hpp"
#include "cartq/analysis.hpp"
#include "cartq/trajectory.hpp"

namespace cartq {

// Shortest decimal form that parses back to the same double. Locale-free;
// used for every numeric CSV field.
std::string format_double(double value);

// Trajectory CSV: header step,t,x,s,V,reward, one row per record. The
// out-of-bounds flag is not part of the file format; readers get it unset.
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj);
Trajectory read_trajectory_csv(const std::filesystem::path& path);

// Learning-curve CSV: header sample,mean_total_reward.
void write_curve_csv(const std::filesystem::path& path, const std::vector<double>& curve);
std::vector<double> read_curve_csv(const std::filesystem::path& path);

nlohmann::json qtable_to_json(const QTable& q);
QTable qtable_from_json(const nlohmann::json& j);
void save_qtable(const std::filesystem::path& path, const QTable& q);
QTable load_qtable(const std::filesystem::path& path);

// Per-run metrics written to report.json. divergence appears only after a
// robustness run.
struct RunReport {
    SteadyStateReport steady_state;
    double peak_acceleration = 0.0;
    std::optional<double> divergence;
};

nlohmann::json report_to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

// Pretty-printed JSON with sorted keys and a trailing newline; the same
// document always serializes to identical bytes.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace cartq

#endif  // CARTQ_IO_HPP
