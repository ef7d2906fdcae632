#include "forage/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace forage {

std::string heuristic_name(Heuristic h) {
    switch (h) {
        case Heuristic::HungerLoneliness: return "hunger_loneliness";
        case Heuristic::RandomOnly: return "random_only";
        case Heuristic::ImmediateInvite: return "immediate_invite";
    }
    return "?";
}

std::string spawn_case_name(SpawnCase c) {
    return c == SpawnCase::TwoCorners ? "two_corners" : "four_corners";
}

Heuristic heuristic_from_name(const std::string& name) {
    if (name == "hunger_loneliness" || name == "hl") return Heuristic::HungerLoneliness;
    if (name == "random_only" || name == "random") return Heuristic::RandomOnly;
    if (name == "immediate_invite" || name == "invite") return Heuristic::ImmediateInvite;
    throw ConfigError("heuristic: unknown value '" + name + "'");
}

SpawnCase spawn_case_from_name(const std::string& name) {
    if (name == "two_corners" || name == "a") return SpawnCase::TwoCorners;
    if (name == "four_corners" || name == "b") return SpawnCase::FourCorners;
    throw ConfigError("spawn_case: unknown value '" + name + "'");
}

std::int64_t SimConfig::composition_total() const {
    std::int64_t total = 0;
    for (const auto& t : prey_composition) total += t.content * t.count;
    return total;
}

std::vector<std::string> SimConfig::validate() const {
    std::vector<std::string> errors;
    auto require = [&](bool ok, const std::string& msg) {
        if (!ok) errors.push_back(msg);
    };
    require(robot_count > 0, "robot_count: must be strictly positive");
    require(total_ticks > 0, "total_ticks: must be strictly positive");
    require(step_length > 0, "step_length: must be strictly positive");
    require(field_edge > 0, "field_edge: must be strictly positive");
    require(invite_range > 0, "invite_range: must be strictly positive");
    require(invite_power > 0, "invite_power: must be strictly positive");
    require(container_capacity > 0, "container_capacity: must be strictly positive");
    require(grazing_rate > 0, "grazing_rate: must be strictly positive");
    require(prey_radius > 0, "prey_radius: must be strictly positive");
    require(min_prey_separation > 0, "min_prey_separation: must be strictly positive");
    require(hunger_increment > 0, "hunger_increment: must be strictly positive");
    require(hunger_decrement > 0, "hunger_decrement: must be strictly positive");
    require(loneliness_increment > 0, "loneliness_increment: must be strictly positive");
    require(loneliness_decrement > 0, "loneliness_decrement: must be strictly positive");
    require(companionship_radius > 0, "companionship_radius: must be strictly positive");
    require(initial_hunger >= 1 && initial_hunger <= 100, "initial_hunger: must be in [1, 100]");
    require(initial_loneliness >= 1 && initial_loneliness <= 100,
            "initial_loneliness: must be in [1, 100]");
    require(satiation_threshold >= 1 && satiation_threshold < 100,
            "satiation_threshold: must be in [1, 100)");
    require(loneliness_threshold >= 1 && loneliness_threshold < 100,
            "loneliness_threshold: must be in [1, 100)");
    require(!prey_composition.empty(), "prey_composition: must not be empty");
    for (const auto& t : prey_composition) {
        require(t.content > 0, "prey_composition: patch content must be strictly positive");
        require(t.count > 0, "prey_composition: patch count must be strictly positive");
    }
    require(total_content > 0, "total_content: must be strictly positive");
    if (!prey_composition.empty() && composition_total() != total_content) {
        std::ostringstream os;
        os << "prey_composition: contents sum to " << composition_total() << ", expected "
           << total_content;
        errors.push_back(os.str());
    }
    int corners = spawn_case == SpawnCase::TwoCorners ? 2 : 4;
    if (robot_count > 0 && robot_count % corners != 0) {
        std::ostringstream os;
        os << "robot_count: " << robot_count << " is not divisible by " << corners << " for "
           << spawn_case_name(spawn_case);
        errors.push_back(os.str());
    }
    return errors;
}

void to_json(nlohmann::json& j, const SimConfig& cfg) {
    j = nlohmann::json{
        {"robot_count", cfg.robot_count},
        {"total_ticks", cfg.total_ticks},
        {"step_length", cfg.step_length},
        {"field_edge", cfg.field_edge},
        {"invite_range", cfg.invite_range},
        {"invite_power", cfg.invite_power},
        {"container_capacity", cfg.container_capacity},
        {"grazing_rate", cfg.grazing_rate},
        {"prey_radius", cfg.prey_radius},
        {"min_prey_separation", cfg.min_prey_separation},
        {"hunger_increment", cfg.hunger_increment},
        {"hunger_decrement", cfg.hunger_decrement},
        {"loneliness_increment", cfg.loneliness_increment},
        {"loneliness_decrement", cfg.loneliness_decrement},
        {"companionship_radius", cfg.companionship_radius},
        {"initial_hunger", cfg.initial_hunger},
        {"initial_loneliness", cfg.initial_loneliness},
        {"satiation_threshold", cfg.satiation_threshold},
        {"loneliness_threshold", cfg.loneliness_threshold},
        {"total_content", cfg.total_content},
        {"spawn_case", spawn_case_name(cfg.spawn_case)},
        {"heuristic", heuristic_name(cfg.heuristic)},
    };
    j["prey_composition"] = nlohmann::json::array();
    for (const auto& t : cfg.prey_composition)
        j["prey_composition"].push_back({{"content", t.content}, {"count", t.count}});
}

void from_json(const nlohmann::json& j, SimConfig& cfg) {
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) j.at(key).get_to(field);
    };
    get("robot_count", cfg.robot_count);
    get("total_ticks", cfg.total_ticks);
    get("step_length", cfg.step_length);
    get("field_edge", cfg.field_edge);
    get("invite_range", cfg.invite_range);
    get("invite_power", cfg.invite_power);
    get("container_capacity", cfg.container_capacity);
    get("grazing_rate", cfg.grazing_rate);
    get("prey_radius", cfg.prey_radius);
    get("min_prey_separation", cfg.min_prey_separation);
    get("hunger_increment", cfg.hunger_increment);
    get("hunger_decrement", cfg.hunger_decrement);
    get("loneliness_increment", cfg.loneliness_increment);
    get("loneliness_decrement", cfg.loneliness_decrement);
    get("companionship_radius", cfg.companionship_radius);
    get("initial_hunger", cfg.initial_hunger);
    get("initial_loneliness", cfg.initial_loneliness);
    get("satiation_threshold", cfg.satiation_threshold);
    get("loneliness_threshold", cfg.loneliness_threshold);
    get("total_content", cfg.total_content);
    if (j.contains("spawn_case")) cfg.spawn_case = spawn_case_from_name(j.at("spawn_case"));
    if (j.contains("heuristic")) cfg.heuristic = heuristic_from_name(j.at("heuristic"));
    if (j.contains("prey_composition")) {
        cfg.prey_composition.clear();
        for (const auto& e : j.at("prey_composition"))
            cfg.prey_composition.push_back({e.at("content").get<std::int64_t>(),
                                            e.at("count").get<int>()});
    }
}

namespace {

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = [] {
        nlohmann::json j = SimConfig{};
        std::set<std::string> k;
        for (auto it = j.begin(); it != j.end(); ++it) k.insert(it.key());
        return k;
    }();
    return keys;
}

}  // namespace

SimConfig load_config(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!known_keys().count(it.key()))
            throw ConfigError(it.key() + ": unknown configuration key");
    }
    SimConfig cfg;
    try {
        from_json(j, cfg);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return cfg;
}

SimConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot read '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("config: '" + path + "' is not valid JSON: " + e.what());
    }
    return load_config(j);
}

std::uint64_t SimConfig::digest() const {
    nlohmann::json j = *this;
    const std::string canon = j.dump();  // nlohmann keeps keys sorted
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (unsigned char c : canon) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace forage
