#pragma once

#include <cstdint>
#include <vector>

#include "forage/config.hpp"
#include "forage/metrics.hpp"
#include "forage/world.hpp"

namespace forage {

struct ExperimentPlan {
    SimConfig base_config;
    std::vector<Heuristic> heuristics = {Heuristic::HungerLoneliness, Heuristic::RandomOnly,
                                         Heuristic::ImmediateInvite};
    std::vector<SpawnCase> spawn_cases = {SpawnCase::TwoCorners};
    int runs_per_cell = 500;
    std::uint64_t base_seed = 0;
    int workers = 1;
};

struct LabeledRun {
    Heuristic heuristic;
    SpawnCase spawn_case;
    int run_index;
    RunRecord record;
};

struct CellStats {
    Heuristic heuristic;
    SpawnCase spawn_case;
    AggregateStats stats;
};

struct ExperimentResults {
    std::vector<LabeledRun> runs;    // sorted by (heuristic, case, run_index)
    std::vector<CellStats> cells;    // same order as the plan grid
};

// 64-bit mix of the four inputs; identical inputs give identical seeds.
std::uint64_t derive_run_seed(std::uint64_t base_seed, std::uint64_t heuristic_index,
                              std::uint64_t case_index, std::uint64_t run_index);

// Stream index used in place of a heuristic index when deriving the prey
// layout seed, so all heuristics see the same world for a given
// (case, run index).
inline constexpr std::uint64_t kLayoutStream = 0xffffffffULL;

std::uint64_t behavior_seed_for(const ExperimentPlan& plan, Heuristic h, SpawnCase c, int run);
std::uint64_t layout_seed_for(const ExperimentPlan& plan, SpawnCase c, int run);

// Runs the full (heuristic x case x run) grid, parallel across runs.
// Output order is independent of worker count.
ExperimentResults monte_carlo(const ExperimentPlan& plan);

}  // namespace forage
