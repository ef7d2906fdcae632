#include "forage/harness.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace forage {

namespace {

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_run_seed(std::uint64_t base_seed, std::uint64_t heuristic_index,
                              std::uint64_t case_index, std::uint64_t run_index) {
    std::uint64_t s = mix64(base_seed);
    s = mix64(s ^ mix64(heuristic_index + 0x68'0001));
    s = mix64(s ^ mix64(case_index + 0x63'0001));
    s = mix64(s ^ mix64(run_index + 0x72'0001));
    return s;
}

std::uint64_t behavior_seed_for(const ExperimentPlan& plan, Heuristic h, SpawnCase c, int run) {
    return derive_run_seed(plan.base_seed, static_cast<std::uint64_t>(h),
                           static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(run));
}

std::uint64_t layout_seed_for(const ExperimentPlan& plan, SpawnCase c, int run) {
    return derive_run_seed(plan.base_seed, kLayoutStream, static_cast<std::uint64_t>(c),
                           static_cast<std::uint64_t>(run));
}

ExperimentResults monte_carlo(const ExperimentPlan& plan) {
    if (plan.runs_per_cell < 1) throw ConfigError("runs: must be at least 1");
    if (plan.heuristics.empty()) throw ConfigError("heuristic: at least one required");
    if (plan.spawn_cases.empty()) throw ConfigError("case: at least one required");

    struct Job {
        Heuristic h;
        SpawnCase c;
        int run;
    };
    std::vector<Job> jobs;
    for (Heuristic h : plan.heuristics)
        for (SpawnCase c : plan.spawn_cases)
            for (int r = 0; r < plan.runs_per_cell; ++r) jobs.push_back({h, c, r});

    std::vector<LabeledRun> results(jobs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size() || failed.load()) return;
            const Job& job = jobs[i];
            SimConfig cfg = plan.base_config;
            cfg.heuristic = job.h;
            cfg.spawn_case = job.c;
            const std::uint64_t seed = behavior_seed_for(plan, job.h, job.c, job.run);
            const std::uint64_t layout = layout_seed_for(plan, job.c, job.run);
            try {
                results[i] = {job.h, job.c, job.run, run_simulation(cfg, seed, layout)};
            } catch (const std::exception& e) {
                std::lock_guard lock(failure_mutex);
                if (!failed.exchange(true)) {
                    std::ostringstream os;
                    os << "run failed (heuristic=" << heuristic_name(job.h)
                       << " case=" << spawn_case_name(job.c) << " run=" << job.run
                       << " seed=" << seed << "): " << e.what();
                    failure = os.str();
                }
            }
        }
    };

    const int workers = std::max(1, plan.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failed.load()) throw SetupError(failure);

    // Jobs were generated in (heuristic, case, run) plan order; make the
    // output order canonical regardless of the plan's list order.
    std::sort(results.begin(), results.end(), [](const LabeledRun& a, const LabeledRun& b) {
        return std::tuple(static_cast<int>(a.heuristic), static_cast<int>(a.spawn_case),
                          a.run_index) < std::tuple(static_cast<int>(b.heuristic),
                                                    static_cast<int>(b.spawn_case), b.run_index);
    });

    ExperimentResults out;
    out.runs = std::move(results);
    for (Heuristic h : plan.heuristics) {
        for (SpawnCase c : plan.spawn_cases) {
            std::vector<RunRecord> cell;
            for (const auto& run : out.runs)
                if (run.heuristic == h && run.spawn_case == c) cell.push_back(run.record);
            out.cells.push_back({h, c, aggregate_runs(cell)});
        }
    }
    return out;
}

}  // namespace forage
