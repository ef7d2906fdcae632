#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "forage/config.hpp"
#include "forage/emotion.hpp"
#include "forage/geometry.hpp"
#include "forage/policy.hpp"

namespace forage {

// Deterministic RNG. Distributions are hand-rolled from the raw 64-bit
// stream so output does not depend on the standard library's
// distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  private:
    std::mt19937_64 engine_;
};

enum class Behavior { RandomSearch, DirectedSearch, Grazing, Shutdown };

struct BehaviorMode {
    Behavior kind = Behavior::RandomSearch;
    Vec2 target{};          // DirectedSearch: position of the broadcasting robot
    int source_robot = -1;  // DirectedSearch: id of that robot
    int prey_id = -1;       // Grazing: patch being grazed

    static BehaviorMode random_search() { return {Behavior::RandomSearch}; }
    static BehaviorMode directed_search(Vec2 target, int source) {
        return {Behavior::DirectedSearch, target, source};
    }
    static BehaviorMode grazing(int prey_id) { return {Behavior::Grazing, {}, -1, prey_id}; }
    static BehaviorMode shutdown() { return {Behavior::Shutdown}; }
};

std::string behavior_name(Behavior b);

struct RobotState {
    int id = 0;
    Vec2 position{};
    EmotionValue hunger;
    EmotionValue loneliness;
    BehaviorMode mode;
    std::int64_t container_load = 0;
    bool inviting = false;
};

struct Prey {
    int id = 0;
    Vec2 center{};
    double radius = 1.0;
    std::int64_t content = 0;
};

struct Signal {
    int source_robot = 0;
    Vec2 position{};
    double radius = 30.0;
};

struct WorldState {
    int tick = 0;
    std::vector<RobotState> robots;
    std::vector<Prey> prey;
    std::vector<Signal> signals;
    std::int64_t initial_total_content = 0;
    std::int64_t invite_ticks = 0;  // cumulative over the run, summed across robots
    Rng rng{0};                     // behavior stream (walk angles)
};

struct RunRecord {
    std::uint64_t seed = 0;
    std::uint64_t config_digest = 0;
    std::int64_t content_removed = 0;
    double percent_removed = 0.0;
    std::int64_t invite_ticks = 0;
    std::optional<double> nu;  // empty when invite_ticks == 0
    int final_tick = 0;
};

// --- spawning -------------------------------------------------------------

// Throws ConfigError when count is not divisible by the corner count.
std::vector<RobotState> spawn_robots(SpawnCase spawn_case, int count, double field_edge,
                                     const SimConfig& cfg);

// Rejection-samples patch centers until all pairwise distances reach
// min_prey_separation. Throws SetupError after too many rejections.
std::vector<Prey> spawn_prey(const SimConfig& cfg, Rng& rng);

// --- movement and sensing -------------------------------------------------

Vec2 step_at_angle(const Vec2& pos, double l, double angle);
Vec2 random_walk_step(const Vec2& pos, double l, Rng& rng);

// Moves min(l, distance) along the ray toward target.
Vec2 directed_step(const Vec2& pos, const Vec2& target, double l);

// Lowest-id live patch whose disc contains pos; content is never revealed.
std::optional<int> detect_prey(const Vec2& pos, const std::vector<Prey>& prey);

// Nearest in-range signal, ties broken by lowest source id. Signals from
// exclude_robot are ignored.
std::optional<Signal> select_signal(const Vec2& pos, const std::vector<Signal>& signals,
                                    int exclude_robot = -1);

// Scarcity allocation: every grazer demands min(rate, remaining capacity);
// short content is handed out in input (ascending id) order.
struct GrazeResult {
    std::int64_t total_taken = 0;
    std::vector<std::int64_t> intakes;  // aligned with capacities_remaining
};
GrazeResult resolve_grazing(std::int64_t prey_content,
                            const std::vector<std::int64_t>& capacities_remaining,
                            std::int64_t rate);

// --- run loop -------------------------------------------------------------

WorldState spawn_world(const SimConfig& cfg, std::uint64_t layout_seed,
                       std::uint64_t behavior_seed);

// One synchronous step: sense, transition, act, resolve, emotion, policy.
// All sensing reads the phase-start snapshot. Precondition: tick < total_ticks.
void tick(WorldState& world, const SimConfig& cfg);

using TickObserver = std::function<void(const WorldState&)>;

// Runs at most cfg.total_ticks steps, exiting early when all prey is
// exhausted or every robot has shut down. The observer, when set, fires on
// the initial state and after every tick.
RunRecord run_simulation(const SimConfig& cfg, std::uint64_t seed, std::uint64_t layout_seed,
                         const TickObserver& observer = nullptr);
RunRecord run_simulation(const SimConfig& cfg, std::uint64_t seed,
                         const TickObserver& observer = nullptr);

}  // namespace forage
