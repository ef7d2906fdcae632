#include "forage/export.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "forage/cli.hpp"

namespace forage {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string runs_csv(const std::vector<LabeledRun>& runs, double invite_power) {
    std::ostringstream os;
    os << "heuristic,case,run_index,seed,content_removed,percent_removed,invite_ticks,cost,nu,"
          "final_tick\n";
    for (const auto& run : runs) {
        const auto& r = run.record;
        os << heuristic_name(run.heuristic) << ',' << spawn_case_name(run.spawn_case) << ','
           << run.run_index << ',' << r.seed << ',' << r.content_removed << ','
           << format_double(r.percent_removed) << ',' << r.invite_ticks << ','
           << format_double(invite_power * static_cast<double>(r.invite_ticks)) << ','
           << (r.nu ? format_double(*r.nu) : "undefined") << ',' << r.final_tick << '\n';
    }
    return os.str();
}

namespace {

nlohmann::json stats_json(const AggregateStats& s) {
    nlohmann::json j{
        {"runs", s.runs},
        {"mean_percent_removed", s.mean_percent_removed},
        {"median_percent_removed", s.median_percent_removed},
        {"min_percent_removed", s.min_percent_removed},
        {"max_percent_removed", s.max_percent_removed},
        {"runs_at_least_half_removed", s.runs_at_least_half_removed},
        {"nu_undefined_count", s.nu_undefined_count},
    };
    j["mean_nu"] = s.mean_nu ? nlohmann::json(*s.mean_nu) : nlohmann::json("undefined");
    j["median_nu"] = s.median_nu ? nlohmann::json(*s.median_nu) : nlohmann::json("undefined");
    return j;
}

}  // namespace

std::string summary_json(const std::vector<CellStats>& cells) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& cell : cells) {
        nlohmann::json e = stats_json(cell.stats);
        e["heuristic"] = heuristic_name(cell.heuristic);
        e["case"] = spawn_case_name(cell.spawn_case);
        j.push_back(e);
    }
    return j.dump(2) + "\n";
}

std::string manifest_json(const ExperimentPlan& plan, const std::string& tool_version) {
    nlohmann::json j;
    j["tool_version"] = tool_version;
    j["config"] = plan.base_config;
    j["config_digest"] = plan.base_config.digest();
    j["base_seed"] = plan.base_seed;
    j["runs_per_cell"] = plan.runs_per_cell;
    j["heuristics"] = nlohmann::json::array();
    for (Heuristic h : plan.heuristics) j["heuristics"].push_back(heuristic_name(h));
    j["spawn_cases"] = nlohmann::json::array();
    for (SpawnCase c : plan.spawn_cases) j["spawn_cases"].push_back(spawn_case_name(c));
    return j.dump(2) + "\n";
}

std::string trace_csv_header() {
    return "tick,robot,x,y,mode,hunger,loneliness,container_load,inviting\n";
}

std::string trace_csv_rows(const WorldState& world) {
    std::ostringstream os;
    for (const auto& r : world.robots) {
        os << world.tick << ',' << r.id << ',' << format_double(r.position.x) << ','
           << format_double(r.position.y) << ',' << behavior_name(r.mode.kind) << ','
           << format_double(r.hunger.value()) << ',' << format_double(r.loneliness.value()) << ','
           << r.container_load << ',' << (r.inviting ? 1 : 0) << '\n';
    }
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SetupError("cannot write '" + path + "'");
    out << contents;
    if (!out) throw SetupError("write failed for '" + path + "'");
}

}  // namespace forage
