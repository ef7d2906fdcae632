#include "forage/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "forage/export.hpp"
#include "forage/harness.hpp"

namespace forage {

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::uint64_t default_base_seed() {
    if (const char* env = std::getenv("FORAGE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ConfigError("FORAGE_SEED: not a valid integer");
        }
    }
    return 0;
}

void validate_or_throw(const SimConfig& cfg) {
    auto errors = cfg.validate();
    if (!errors.empty()) {
        std::string msg;
        for (const auto& e : errors) msg += e + "\n";
        msg.pop_back();
        throw ConfigError(msg);
    }
}

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw SetupError("cannot create output directory '" + dir + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Swarm foraging simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string heuristic_arg;  // single name, or comma list for `experiment`
    std::string case_arg;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool trace = false;
    int runs = 500;
    int workers = 1;

    auto add_common = [&](CLI::App* cmd, bool with_seed) {
        cmd->add_option("--config", config_path, "JSON configuration file");
        cmd->add_option("--heuristic", heuristic_arg, "hl | random | invite");
        cmd->add_option("--case", case_arg, "a (two corners) | b (four corners)");
        cmd->add_option("--out", out_dir, "output directory");
        if (with_seed) {
            cmd->add_option("--seed", seed, "base seed (default: FORAGE_SEED or 0)")
                ->each([&](const std::string&) { seed_given = true; });
        }
    };

    CLI::App* simulate = app.add_subcommand("simulate", "Run a single simulation");
    add_common(simulate, true);
    simulate->add_flag("--trace", trace, "write a per-tick trace file");

    CLI::App* experiment = app.add_subcommand("experiment", "Run a Monte Carlo grid");
    add_common(experiment, true);
    experiment->add_option("--runs", runs, "runs per (heuristic, case) cell")
        ->check(CLI::PositiveNumber);
    experiment->add_option("--workers", workers, "parallel worker threads")
        ->check(CLI::PositiveNumber);

    CLI::App* validate = app.add_subcommand("validate", "Check and print a configuration");
    add_common(validate, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        SimConfig cfg;
        if (!config_path.empty()) cfg = load_config_file(config_path);

        if (simulate->parsed() || validate->parsed()) {
            if (!heuristic_arg.empty()) cfg.heuristic = heuristic_from_name(heuristic_arg);
            if (!case_arg.empty()) cfg.spawn_case = spawn_case_from_name(case_arg);
            validate_or_throw(cfg);

            if (validate->parsed()) {
                nlohmann::json j = cfg;
                std::cout << j.dump(2) << "\n";
                return 0;
            }

            ExperimentPlan plan;
            plan.base_config = cfg;
            plan.heuristics = {cfg.heuristic};
            plan.spawn_cases = {cfg.spawn_case};
            plan.runs_per_cell = 1;
            plan.base_seed = seed_given ? seed : default_base_seed();

            const std::uint64_t run_seed =
                behavior_seed_for(plan, cfg.heuristic, cfg.spawn_case, 0);
            const std::uint64_t layout = layout_seed_for(plan, cfg.spawn_case, 0);

            ensure_out_dir(out_dir);
            const auto out = std::filesystem::path(out_dir);

            std::ostringstream trace_os;
            TickObserver observer;
            if (trace) {
                trace_os << trace_csv_header();
                observer = [&](const WorldState& w) { trace_os << trace_csv_rows(w); };
            }
            RunRecord rec = run_simulation(cfg, run_seed, layout, observer);

            std::vector<LabeledRun> labeled{{cfg.heuristic, cfg.spawn_case, 0, rec}};
            write_file((out / "runs.csv").string(), runs_csv(labeled, cfg.invite_power));
            write_file((out / "manifest.json").string(), manifest_json(plan, kToolVersion));
            if (trace) write_file((out / "trace.csv").string(), trace_os.str());

            std::cout << "run complete: content_removed=" << rec.content_removed
                      << " percent_removed=" << format_double(rec.percent_removed)
                      << " invite_ticks=" << rec.invite_ticks
                      << " nu=" << (rec.nu ? format_double(*rec.nu) : "undefined")
                      << " final_tick=" << rec.final_tick << "\n";
            return 0;
        }

        // experiment: --heuristic/--case accept comma-separated lists.
        ExperimentPlan plan;
        plan.base_config = cfg;
        plan.runs_per_cell = runs;
        plan.workers = workers;
        plan.base_seed = seed_given ? seed : default_base_seed();
        if (!heuristic_arg.empty()) {
            plan.heuristics.clear();
            for (const auto& name : split_list(heuristic_arg))
                plan.heuristics.push_back(heuristic_from_name(name));
        }
        if (!case_arg.empty()) {
            plan.spawn_cases.clear();
            for (const auto& name : split_list(case_arg))
                plan.spawn_cases.push_back(spawn_case_from_name(name));
        }
        for (SpawnCase c : plan.spawn_cases) {
            SimConfig check = cfg;
            check.spawn_case = c;
            if (!plan.heuristics.empty()) check.heuristic = plan.heuristics.front();
            validate_or_throw(check);
        }

        ExperimentResults results = monte_carlo(plan);

        ensure_out_dir(out_dir);
        const auto out = std::filesystem::path(out_dir);
        write_file((out / "runs.csv").string(), runs_csv(results.runs, cfg.invite_power));
        write_file((out / "summary.json").string(), summary_json(results.cells));
        write_file((out / "manifest.json").string(), manifest_json(plan, kToolVersion));

        std::cout << results.runs.size() << " runs written to " << (out / "runs.csv").string()
                  << "\n";
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace forage
