// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "forage/cli.hpp"
#include "forage/export.hpp"
#include "forage/harness.hpp"
#include "forage/metrics.hpp"
#include "forage/policy.hpp"
#include "forage/world.hpp"

using namespace forage;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

// ---- criterion 1: invariant suite over 50 full traces --------------------

struct InvariantChecker {
    const SimConfig& cfg;
    bool first = true;
    WorldState prev;
    std::string violation;

    explicit InvariantChecker(const SimConfig& c) : cfg(c) {}

    void fail(const std::string& what) {
        if (violation.empty()) violation = what;
    }

    static bool legal_edge(Behavior from, Behavior to) {
        switch (from) {
            case Behavior::RandomSearch:
            case Behavior::DirectedSearch:
                return to != Behavior::Shutdown;
            case Behavior::Grazing:
                return to != Behavior::DirectedSearch;
            case Behavior::Shutdown:
                return to == Behavior::Shutdown;
        }
        return false;
    }

    void operator()(const WorldState& w) {
        std::int64_t total = 0;
        for (const auto& r : w.robots) total += r.container_load;
        for (const auto& p : w.prey) total += p.content;
        if (total != w.initial_total_content) fail("content conservation");

        int inviting = 0;
        for (const auto& r : w.robots) {
            if (r.hunger.value() < 1.0 || r.hunger.value() > 100.0) fail("hunger bounds");
            if (r.loneliness.value() < 1.0 || r.loneliness.value() > 100.0)
                fail("loneliness bounds");
            if (r.inviting) ++inviting;
        }
        if (static_cast<int>(w.signals.size()) != inviting) fail("signal count");

        if (!first) {
            for (std::size_t i = 0; i < w.robots.size(); ++i) {
                const auto& a = prev.robots[i];
                const auto& b = w.robots[i];
                if (!legal_edge(a.mode.kind, b.mode.kind)) fail("FSM edge set");
                const double moved = distance(a.position, b.position);
                switch (b.mode.kind) {
                    case Behavior::RandomSearch:
                        if (std::abs(moved - cfg.step_length) > 1e-9)
                            fail("random-search step magnitude");
                        break;
                    case Behavior::DirectedSearch:
                        if (moved > cfg.step_length + 1e-9) fail("directed step magnitude");
                        break;
                    case Behavior::Grazing:
                    case Behavior::Shutdown:
                        if (moved != 0.0) fail("grazing/shutdown robot moved");
                        break;
                }
            }
        }
        prev = w;
        first = false;
    }
};

void criterion_invariants() {
    const Heuristic heuristics[] = {Heuristic::HungerLoneliness, Heuristic::RandomOnly,
                                    Heuristic::ImmediateInvite};
    const SpawnCase cases[] = {SpawnCase::TwoCorners, SpawnCase::FourCorners};
    std::string violation;
    int traces = 0;
    for (int i = 0; i < 50; ++i) {
        SimConfig cfg;
        cfg.heuristic = heuristics[i % 3];
        cfg.spawn_case = cases[i % 2];
        InvariantChecker check(cfg);
        run_simulation(cfg, 1000 + i, std::ref(check));
        if (!check.violation.empty() && violation.empty())
            violation = check.violation + " in trace " + std::to_string(i);
        ++traces;
    }
    report(1, "invariant suite over 50 full traces", violation.empty(),
           violation.empty() ? std::to_string(traces) + " traces clean" : violation);
}

// ---- criterion 2: random walk RMS displacement ---------------------------

void criterion_rms() {
    const int walks = 10000;
    const int steps = 1500;
    const double l = 0.5;
    Rng rng(4242);
    double sum_sq = 0.0;
    for (int w = 0; w < walks; ++w) {
        Vec2 pos{0, 0};
        for (int s = 0; s < steps; ++s) pos = random_walk_step(pos, l, rng);
        sum_sq += pos.x * pos.x + pos.y * pos.y;
    }
    const double rms = std::sqrt(sum_sq / walks);
    const double expected = l * std::sqrt(static_cast<double>(steps));  // 19.365...
    const double rel = std::abs(rms - expected) / expected;
    std::ostringstream os;
    os << "rms=" << rms << " expected=" << expected << " rel_err=" << rel;
    report(2, "random-walk RMS displacement within 2% of l*sqrt(N)", rel < 0.02, os.str());
}

// ---- criterion 3: experiment determinism ---------------------------------

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void criterion_determinism() {
    const fs::path base = fs::temp_directory_path() / "forage_acceptance_det";
    fs::remove_all(base);
    auto run = [&](const std::string& name, const std::string& workers) {
        const fs::path out = base / name;
        std::vector<std::string> args = {"experiment", "--heuristic", "hl,random,invite",
                                         "--case",     "a",          "--runs",
                                         "20",         "--seed",     "42",
                                         "--workers",  workers,      "--out",
                                         out.string()};
        std::vector<const char*> argv{"forage"};
        for (const auto& a : args) argv.push_back(a.c_str());
        const int rc = run_cli(static_cast<int>(argv.size()), argv.data());
        return rc == 0 ? slurp(out / "runs.csv") : std::string();
    };
    const std::string first = run("a", "1");
    const std::string second = run("b", "1");
    const std::string parallel = run("c", "8");
    fs::remove_all(base);
    const bool ok = !first.empty() && first == second && first == parallel;
    report(3, "experiment runs file byte-identical across repeats and worker counts", ok);
}

// ---- criterion 4: heuristic gating ---------------------------------------

void criterion_gating() {
    SimConfig base;
    std::string violation;

    {  // RandomOnly: zero invite ticks in every run
        SimConfig cfg = base;
        cfg.heuristic = Heuristic::RandomOnly;
        for (int i = 0; i < 50 && violation.empty(); ++i) {
            if (run_simulation(cfg, 9000 + i).invite_ticks != 0)
                violation = "random_only invited in run " + std::to_string(i);
        }
    }

    {  // ImmediateInvite: every grazing robot invites at every tick
        SimConfig cfg = base;
        cfg.heuristic = Heuristic::ImmediateInvite;
        for (int i = 0; i < 50 && violation.empty(); ++i) {
            auto observer = [&](const WorldState& w) {
                for (const auto& r : w.robots) {
                    if (r.mode.kind == Behavior::Grazing && !r.inviting)
                        violation = "immediate_invite grazing robot not inviting";
                    if (r.inviting && r.mode.kind != Behavior::Grazing)
                        violation = "immediate_invite non-grazing robot inviting";
                }
            };
            run_simulation(cfg, 9100 + i, observer);
        }
    }

    {  // HungerLoneliness: invites only while grazing in (Satiated, High)
        SimConfig cfg = base;
        cfg.heuristic = Heuristic::HungerLoneliness;
        for (int i = 0; i < 50 && violation.empty(); ++i) {
            auto observer = [&](const WorldState& w) {
                for (const auto& r : w.robots) {
                    if (!r.inviting) continue;
                    if (r.mode.kind != Behavior::Grazing)
                        violation = "hl invite while not grazing";
                    const EmotionState s = classify_emotion(r.hunger, r.loneliness, cfg);
                    if (s.hunger_level != HungerLevel::Satiated ||
                        s.loneliness_level != LonelinessLevel::High)
                        violation = "hl invite outside (Satiated, High)";
                }
            };
            run_simulation(cfg, 9200 + i, observer);
        }
    }

    report(4, "heuristic gating over 50-run batches per heuristic", violation.empty(), violation);
}

// ---- criteria 5 & 6: qualitative reproduction ----------------------------

struct CaseOutcome {
    AggregateStats hl;
    AggregateStats invite;
    AggregateStats random;
};

CaseOutcome run_case(SpawnCase spawn_case) {
    ExperimentPlan plan;
    plan.spawn_cases = {spawn_case};
    plan.runs_per_cell = 100;
    plan.base_seed = 6;
    plan.workers = 8;
    const ExperimentResults res = monte_carlo(plan);
    CaseOutcome out;
    for (const auto& cell : res.cells) {
        if (cell.heuristic == Heuristic::HungerLoneliness) out.hl = cell.stats;
        if (cell.heuristic == Heuristic::ImmediateInvite) out.invite = cell.stats;
        if (cell.heuristic == Heuristic::RandomOnly) out.random = cell.stats;
    }
    return out;
}

void criterion_case_a() {
    const CaseOutcome o = run_case(SpawnCase::TwoCorners);
    std::ostringstream os;
    os << "median_nu hl=" << (o.hl.median_nu ? *o.hl.median_nu : -1)
       << " invite=" << (o.invite.median_nu ? *o.invite.median_nu : -1)
       << "; >=50% runs hl=" << o.hl.runs_at_least_half_removed
       << " invite=" << o.invite.runs_at_least_half_removed;
    const bool nu_ok = o.hl.median_nu && o.invite.median_nu && *o.hl.median_nu > *o.invite.median_nu;
    const bool removal_ok = o.hl.runs_at_least_half_removed >= 60 &&
                            o.hl.runs_at_least_half_removed >= o.invite.runs_at_least_half_removed;
    report(5, "Case A: hl beats immediate-invite on nu and >=50% removal counts",
           nu_ok && removal_ok, os.str());
}

void criterion_case_b() {
    const CaseOutcome o = run_case(SpawnCase::FourCorners);
    const bool overlap = o.hl.min_percent_removed <= o.invite.max_percent_removed &&
                         o.invite.min_percent_removed <= o.hl.max_percent_removed;
    const bool nu_ok = o.hl.median_nu && o.invite.median_nu && *o.hl.median_nu > *o.invite.median_nu;
    std::ostringstream os;
    os << "percent ranges hl=[" << o.hl.min_percent_removed << "," << o.hl.max_percent_removed
       << "] invite=[" << o.invite.min_percent_removed << "," << o.invite.max_percent_removed
       << "]; median_nu hl=" << (o.hl.median_nu ? *o.hl.median_nu : -1)
       << " invite=" << (o.invite.median_nu ? *o.invite.median_nu : -1);
    report(6, "Case B: removal distributions overlap while hl keeps the nu edge",
           overlap && nu_ok, os.str());
}

// ---- criterion 7: efficiency formula unit checks -------------------------

void criterion_nu_units() {
    bool ok = compute_nu(6000, 0.05, 2000) == 60.0;
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<std::int64_t> content(0, 6000);
    std::uniform_int_distribution<std::int64_t> ticks(1, 100000);
    std::uniform_real_distribution<double> power(0.001, 1.0);
    for (int i = 0; i < 1000 && ok; ++i) {
        const std::int64_t c = content(rng);
        const std::int64_t t = ticks(rng);
        const double p = power(rng);
        const double base = *compute_nu(c, p, t);
        if (std::abs(*compute_nu(c, 2 * p, t) - base / 2) > 1e-9 * std::max(1.0, base)) ok = false;
        if (std::abs(*compute_nu(2 * c, p, t) - 2 * base) > 1e-9 * std::max(1.0, base)) ok = false;
    }
    report(7, "efficiency formula exact value plus scale and linearity laws", ok);
}

}  // namespace

int main() {
    criterion_invariants();
    criterion_rms();
    criterion_determinism();
    criterion_gating();
    criterion_case_a();
    criterion_case_b();
    criterion_nu_units();
    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
