#include "cartq/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cartq {

namespace {

std::runtime_error file_error(const std::filesystem::path& path, const std::string& what) {
    return std::runtime_error(path.string() + ": " + what);
}

std::ofstream open_for_writing(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw file_error(path, "cannot open for writing");
    return out;
}

std::ifstream open_for_reading(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw file_error(path, "cannot open for reading");
    return in;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_double(const std::string& text, const std::filesystem::path& path) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw file_error(path, "bad numeric field '" + text + "'");
    return value;
}

}  // namespace

std::string format_double(double value) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj) {
    std::ofstream out = open_for_writing(path);
    out << "step,t,x,s,V,reward\n";
    for (std::size_t i = 0; i < traj.steps.size(); ++i) {
        const TrajectoryStep& st = traj.steps[i];
        out << i << ',' << format_double(st.t) << ',' << format_double(st.x) << ','
            << format_double(st.s) << ',' << format_double(st.V) << ','
            << format_double(st.reward) << '\n';
    }
}

Trajectory read_trajectory_csv(const std::filesystem::path& path) {
    std::ifstream in = open_for_reading(path);
    std::string line;
    if (!std::getline(in, line) || line != "step,t,x,s,V,reward") {
        throw file_error(path, "expected trajectory header step,t,x,s,V,reward");
    }
    Trajectory traj;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != 6) throw file_error(path, "expected 6 fields, got row '" + line + "'");
        traj.steps.push_back({parse_double(fields[1], path), parse_double(fields[2], path),
                              parse_double(fields[3], path), parse_double(fields[4], path),
                              parse_double(fields[5], path)});
    }
    return traj;
}

void write_curve_csv(const std::filesystem::path& path, const std::vector<double>& curve) {
    std::ofstream out = open_for_writing(path);
    out << "sample,mean_total_reward\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        out << i << ',' << format_double(curve[i]) << '\n';
    }
}

std::vector<double> read_curve_csv(const std::filesystem::path& path) {
    std::ifstream in = open_for_reading(path);
    std::string line;
    if (!std::getline(in, line) || line != "sample,mean_total_reward") {
        throw file_error(path, "expected curve header sample,mean_total_reward");
    }
    std::vector<double> curve;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != 2) throw file_error(path, "expected 2 fields, got row '" + line + "'");
        curve.push_back(parse_double(fields[1], path));
    }
    return curve;
}

nlohmann::json qtable_to_json(const QTable& q) {
    nlohmann::json j;
    j["grid"] = {{"x_min", q.grid().x_min},
                 {"x_max", q.grid().x_max},
                 {"bin_width", q.grid().bin_width}};
    j["actions"] = q.actions();
    nlohmann::json values = nlohmann::json::array();
    for (int bin = 0; bin < q.num_bins(); ++bin) {
        nlohmann::json row = nlohmann::json::array();
        for (int a = 0; a < q.num_actions(); ++a) row.push_back(q.value(bin, a));
        values.push_back(std::move(row));
    }
    j["values"] = std::move(values);
    return j;
}

QTable qtable_from_json(const nlohmann::json& j) {
    const nlohmann::json& grid_json = j.at("grid");
    QuantizationGrid grid{grid_json.at("x_min").get<double>(), grid_json.at("x_max").get<double>(),
                          grid_json.at("bin_width").get<double>()};
    QTable q(grid);
    const std::vector<int> actions = j.at("actions").get<std::vector<int>>();
    if (actions != q.actions()) throw std::runtime_error("qtable: unexpected action set");
    const nlohmann::json& values = j.at("values");
    if (static_cast<int>(values.size()) != q.num_bins()) {
        throw std::runtime_error("qtable: value rows do not match the grid");
    }
    for (int bin = 0; bin < q.num_bins(); ++bin) {
        const nlohmann::json& row = values.at(static_cast<std::size_t>(bin));
        if (static_cast<int>(row.size()) != q.num_actions()) {
            throw std::runtime_error("qtable: value row has wrong action count");
        }
        for (int a = 0; a < q.num_actions(); ++a) {
            q.value(bin, a) = row.at(static_cast<std::size_t>(a)).get<double>();
        }
    }
    return q;
}

void save_qtable(const std::filesystem::path& path, const QTable& q) {
    write_json_file(path, qtable_to_json(q));
}

QTable load_qtable(const std::filesystem::path& path) {
    return qtable_from_json(read_json_file(path));
}

nlohmann::json report_to_json(const RunReport& report) {
    const SteadyStateReport& ss = report.steady_state;
    nlohmann::json j;
    j["settle_step"] = ss.settle_step ? nlohmann::json(*ss.settle_step) : nlohmann::json(nullptr);
    j["settle_time"] = ss.settle_time ? nlohmann::json(*ss.settle_time) : nlohmann::json(nullptr);
    j["positions"] = ss.positions;
    j["width"] = ss.width;
    j["contains_target"] = ss.contains_target;
    j["target"] = ss.target;
    j["peak_acceleration"] = report.peak_acceleration;
    if (report.divergence) j["divergence"] = *report.divergence;
    return j;
}

RunReport report_from_json(const nlohmann::json& j) {
    RunReport report;
    if (!j.at("settle_step").is_null()) {
        report.steady_state.settle_step = j.at("settle_step").get<int>();
    }
    if (!j.at("settle_time").is_null()) {
        report.steady_state.settle_time = j.at("settle_time").get<double>();
    }
    report.steady_state.positions = j.at("positions").get<std::vector<double>>();
    report.steady_state.width = j.at("width").get<double>();
    report.steady_state.contains_target = j.at("contains_target").get<bool>();
    report.steady_state.target = j.at("target").get<double>();
    report.peak_acceleration = j.at("peak_acceleration").get<double>();
    if (j.contains("divergence")) report.divergence = j.at("divergence").get<double>();
    return report;
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out = open_for_writing(path);
    out << j.dump(2) << '\n';
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
    std::ifstream in = open_for_reading(path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw file_error(path, e.what());
    }
}

}  // namespace cartq
