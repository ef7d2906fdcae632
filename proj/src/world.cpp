#include "forage/world.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <sstream>

#include "forage/metrics.hpp"

namespace forage {

std::string behavior_name(Behavior b) {
    switch (b) {
        case Behavior::RandomSearch: return "random_search";
        case Behavior::DirectedSearch: return "directed_search";
        case Behavior::Grazing: return "grazing";
        case Behavior::Shutdown: return "shutdown";
    }
    return "?";
}

std::vector<RobotState> spawn_robots(SpawnCase spawn_case, int count, double field_edge,
                                     const SimConfig& cfg) {
    const int corners = spawn_case == SpawnCase::TwoCorners ? 2 : 4;
    if (count <= 0 || count % corners != 0) {
        std::ostringstream os;
        os << "robot_count: " << count << " is not divisible by " << corners << " for "
           << spawn_case_name(spawn_case);
        throw ConfigError(os.str());
    }
    std::vector<Vec2> spots;
    if (spawn_case == SpawnCase::TwoCorners) {
        spots = {{0, 0}, {field_edge, field_edge}};
    } else {
        spots = {{0, 0}, {field_edge, 0}, {0, field_edge}, {field_edge, field_edge}};
    }
    std::vector<RobotState> robots;
    robots.reserve(count);
    const int per_corner = count / corners;
    for (int c = 0; c < corners; ++c) {
        for (int i = 0; i < per_corner; ++i) {
            RobotState r;
            r.id = static_cast<int>(robots.size());
            r.position = spots[c];
            r.hunger = EmotionValue(cfg.initial_hunger);
            r.loneliness = EmotionValue(cfg.initial_loneliness);
            r.mode = BehaviorMode::random_search();
            robots.push_back(r);
        }
    }
    return robots;
}

std::vector<Prey> spawn_prey(const SimConfig& cfg, Rng& rng) {
    constexpr int kMaxRejections = 10000;
    const double lo = cfg.prey_radius;
    const double hi = cfg.field_edge - cfg.prey_radius;
    if (hi <= lo) throw SetupError("field_edge too small for prey_radius");
    std::vector<Prey> prey;
    int rejections = 0;
    for (const auto& type : cfg.prey_composition) {
        for (int i = 0; i < type.count; ++i) {
            for (;;) {
                Vec2 center{rng.uniform(lo, hi), rng.uniform(lo, hi)};
                bool ok = true;
                for (const auto& p : prey) {
                    if (distance(center, p.center) < cfg.min_prey_separation) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    prey.push_back({static_cast<int>(prey.size()), center, cfg.prey_radius,
                                    type.content});
                    break;
                }
                if (++rejections > kMaxRejections)
                    throw SetupError("prey placement failed: rejection budget exhausted");
            }
        }
    }
    return prey;
}

Vec2 step_at_angle(const Vec2& pos, double l, double angle) {
    return {pos.x + l * std::cos(angle), pos.y + l * std::sin(angle)};
}

Vec2 random_walk_step(const Vec2& pos, double l, Rng& rng) {
    return step_at_angle(pos, l, rng.uniform(0.0, 2.0 * std::numbers::pi));
}

Vec2 directed_step(const Vec2& pos, const Vec2& target, double l) {
    const double d = distance(pos, target);
    if (d <= l) return target;
    return pos + (target - pos) * (l / d);
}

std::optional<int> detect_prey(const Vec2& pos, const std::vector<Prey>& prey) {
    for (const auto& p : prey) {
        if (p.content > 0 && distance(pos, p.center) <= p.radius) return p.id;
    }
    return std::nullopt;
}

std::optional<Signal> select_signal(const Vec2& pos, const std::vector<Signal>& signals,
                                    int exclude_robot) {
    std::optional<Signal> best;
    double best_dist = 0.0;
    for (const auto& s : signals) {
        if (s.source_robot == exclude_robot) continue;
        const double d = distance(pos, s.position);
        if (d > s.radius) continue;
        if (!best || d < best_dist || (d == best_dist && s.source_robot < best->source_robot)) {
            best = s;
            best_dist = d;
        }
    }
    return best;
}

GrazeResult resolve_grazing(std::int64_t prey_content,
                            const std::vector<std::int64_t>& capacities_remaining,
                            std::int64_t rate) {
    assert(rate > 0 && prey_content >= 0);
    GrazeResult result;
    result.intakes.assign(capacities_remaining.size(), 0);
    std::int64_t left = prey_content;
    for (std::size_t i = 0; i < capacities_remaining.size() && left > 0; ++i) {
        const std::int64_t demand = std::min(rate, capacities_remaining[i]);
        const std::int64_t take = std::min(demand, left);
        result.intakes[i] = take;
        left -= take;
        result.total_taken += take;
    }
    return result;
}

WorldState spawn_world(const SimConfig& cfg, std::uint64_t layout_seed,
                       std::uint64_t behavior_seed) {
    WorldState world;
    world.robots = spawn_robots(cfg.spawn_case, cfg.robot_count, cfg.field_edge, cfg);
    Rng layout_rng(layout_seed);
    world.prey = spawn_prey(cfg, layout_rng);
    for (const auto& p : world.prey) world.initial_total_content += p.content;
    world.rng = Rng(behavior_seed);
    return world;
}

namespace {

struct Sensed {
    std::optional<int> prey_hit;
    std::optional<Signal> signal;
    int grazing_companions = 0;
};

}  // namespace

void tick(WorldState& world, const SimConfig& cfg) {
    assert(world.tick < cfg.total_ticks);
    const auto& prey = world.prey;
    auto& robots = world.robots;
    const int n = static_cast<int>(robots.size());

    // 1. SENSE: everything reads the start-of-tick snapshot.
    std::vector<Sensed> sensed(n);
    for (int i = 0; i < n; ++i) {
        const auto& r = robots[i];
        if (r.mode.kind == Behavior::Shutdown) continue;
        sensed[i].prey_hit = detect_prey(r.position, prey);
        sensed[i].signal = select_signal(r.position, world.signals, r.id);
        int companions = 0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            if (robots[j].mode.kind != Behavior::Grazing) continue;
            if (distance(r.position, robots[j].position) <= cfg.companionship_radius) ++companions;
        }
        sensed[i].grazing_companions = companions;
    }

    // 2. TRANSITION: prey detection beats signals; grazing ignores signals.
    for (int i = 0; i < n; ++i) {
        auto& r = robots[i];
        const auto& s = sensed[i];
        switch (r.mode.kind) {
            case Behavior::RandomSearch:
            case Behavior::DirectedSearch:
                if (s.prey_hit) {
                    r.mode = BehaviorMode::grazing(*s.prey_hit);
                } else if (s.signal) {
                    r.mode = BehaviorMode::directed_search(s.signal->position,
                                                          s.signal->source_robot);
                } else if (r.mode.kind == Behavior::DirectedSearch) {
                    r.mode = BehaviorMode::random_search();
                }
                break;
            case Behavior::Grazing:
                if (r.container_load >= cfg.container_capacity) {
                    r.mode = BehaviorMode::shutdown();
                    r.inviting = false;
                } else if (prey[r.mode.prey_id].content == 0) {
                    r.mode = BehaviorMode::random_search();
                }
                break;
            case Behavior::Shutdown:
                break;
        }
    }

    // 3. ACT: searchers move, grazers and shut-down robots stay put.
    for (auto& r : robots) {
        if (r.mode.kind == Behavior::RandomSearch) {
            r.position = random_walk_step(r.position, cfg.step_length, world.rng);
        } else if (r.mode.kind == Behavior::DirectedSearch) {
            r.position = directed_step(r.position, r.mode.target, cfg.step_length);
        }
    }

    // 4. RESOLVE: per-patch allocation in ascending robot id order.
    std::vector<bool> grazed(n, false);
    for (auto& p : world.prey) {
        if (p.content == 0) continue;
        std::vector<int> grazer_ids;
        std::vector<std::int64_t> caps;
        for (int i = 0; i < n; ++i) {
            const auto& r = robots[i];
            if (r.mode.kind == Behavior::Grazing && r.mode.prey_id == p.id) {
                grazer_ids.push_back(i);
                caps.push_back(cfg.container_capacity - r.container_load);
            }
        }
        if (grazer_ids.empty()) continue;
        const GrazeResult res = resolve_grazing(p.content, caps, cfg.grazing_rate);
        p.content -= res.total_taken;
        for (std::size_t k = 0; k < grazer_ids.size(); ++k) {
            if (res.intakes[k] > 0) {
                robots[grazer_ids[k]].container_load += res.intakes[k];
                grazed[grazer_ids[k]] = true;
            }
        }
    }

    // 5. EMOTION.
    for (int i = 0; i < n; ++i) {
        auto& r = robots[i];
        if (r.mode.kind == Behavior::Shutdown) continue;
        const LocalView view{r.mode.kind == Behavior::Grazing, grazed[i],
                             sensed[i].grazing_companions};
        r.hunger = update_hunger(r.hunger, grazed[i], cfg);
        r.loneliness = update_loneliness(r.loneliness, view, cfg);
    }

    // 6. POLICY + ACCOUNTING.
    world.signals.clear();
    for (int i = 0; i < n; ++i) {
        auto& r = robots[i];
        if (r.mode.kind == Behavior::Shutdown) {
            r.inviting = false;
            continue;
        }
        const LocalView view{r.mode.kind == Behavior::Grazing, grazed[i],
                             sensed[i].grazing_companions};
        const EmotionState state = classify_emotion(r.hunger, r.loneliness, cfg);
        r.inviting = invite_decision(cfg.heuristic, state, view);
        if (r.inviting) {
            world.signals.push_back({r.id, r.position, cfg.invite_range});
            ++world.invite_ticks;
        }
    }
    ++world.tick;
}

namespace {

bool all_prey_exhausted(const WorldState& w) {
    for (const auto& p : w.prey)
        if (p.content > 0) return false;
    return true;
}

bool all_robots_shutdown(const WorldState& w) {
    for (const auto& r : w.robots)
        if (r.mode.kind != Behavior::Shutdown) return false;
    return true;
}

}  // namespace

RunRecord run_simulation(const SimConfig& cfg, std::uint64_t seed, std::uint64_t layout_seed,
                         const TickObserver& observer) {
    WorldState world = spawn_world(cfg, layout_seed, seed);
    if (observer) observer(world);
    while (world.tick < cfg.total_ticks) {
        if (all_prey_exhausted(world) || all_robots_shutdown(world)) break;
        tick(world, cfg);
        if (observer) observer(world);
    }
    RunRecord rec;
    rec.seed = seed;
    rec.config_digest = cfg.digest();
    for (const auto& r : world.robots) rec.content_removed += r.container_load;
    rec.percent_removed = world.initial_total_content > 0
                              ? percent_removed(rec.content_removed, world.initial_total_content)
                              : 0.0;
    rec.invite_ticks = world.invite_ticks;
    rec.nu = compute_nu(rec.content_removed, cfg.invite_power, rec.invite_ticks);
    rec.final_tick = world.tick;
    return rec;
}

RunRecord run_simulation(const SimConfig& cfg, std::uint64_t seed, const TickObserver& observer) {
    return run_simulation(cfg, seed, seed, observer);
}

}  // namespace forage
