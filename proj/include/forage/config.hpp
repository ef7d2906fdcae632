#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace forage {

enum class Heuristic { HungerLoneliness = 0, RandomOnly = 1, ImmediateInvite = 2 };
enum class SpawnCase { TwoCorners = 0, FourCorners = 1 };

std::string heuristic_name(Heuristic h);
std::string spawn_case_name(SpawnCase c);
Heuristic heuristic_from_name(const std::string& name);    // throws ConfigError
SpawnCase spawn_case_from_name(const std::string& name);   // throws ConfigError

// One prey type: per-patch content and how many patches of that type.
struct PreyType {
    std::int64_t content = 0;
    int count = 0;

    bool operator==(const PreyType&) const = default;
};

// All simulation tunables. Defaults are the reference experiment values.
struct SimConfig {
    int robot_count = 60;
    int total_ticks = 1500;
    double step_length = 0.5;
    double field_edge = 40.0;
    double invite_range = 30.0;
    double invite_power = 0.05;
    std::int64_t container_capacity = 100;
    std::int64_t grazing_rate = 1;
    std::vector<PreyType> prey_composition = {{2900, 2}, {50, 4}};
    std::int64_t total_content = 6000;  // expected sum over prey_composition
    double prey_radius = 1.0;
    double min_prey_separation = 2.0;
    // Emotion step sizes per tick. Calibrated so grazing satiates quickly,
    // hunger builds slowly against the run length, and loneliness recovers
    // faster than hunger (see the calibration notes in the README).
    double hunger_increment = 0.2;
    double hunger_decrement = 50.0;
    double loneliness_increment = 5.0;
    double loneliness_decrement = 1.0;
    double companionship_radius = 2.0;
    double initial_hunger = 100.0;
    double initial_loneliness = 100.0;
    double satiation_threshold = 50.0;
    double loneliness_threshold = 50.0;
    SpawnCase spawn_case = SpawnCase::TwoCorners;
    Heuristic heuristic = Heuristic::HungerLoneliness;

    bool operator==(const SimConfig&) const = default;

    std::int64_t composition_total() const;

    // Empty when valid; otherwise one message per offending key.
    std::vector<std::string> validate() const;

    // Stable 64-bit digest of the fully resolved configuration.
    std::uint64_t digest() const;
};

void to_json(nlohmann::json& j, const SimConfig& cfg);
void from_json(const nlohmann::json& j, SimConfig& cfg);

// Reports bad values or unknown keys by name; throws ConfigError.
SimConfig load_config(const nlohmann::json& j);
SimConfig load_config_file(const std::string& path);

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SetupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace forage
