#pragma once

#include "forage/config.hpp"
#include "forage/emotion.hpp"

namespace forage {

// What a single robot can see about its own situation in one tick.
struct LocalView {
    bool is_grazing = false;
    bool grazed_this_tick = false;  // container load strictly increased
    int grazing_companions = 0;     // other grazing robots within companionship_radius
};

inline EmotionValue update_hunger(EmotionValue h, bool grazed_this_tick, const SimConfig& cfg) {
    if (grazed_this_tick) return clamp_emotion(h.value() - cfg.hunger_decrement);
    return clamp_emotion(h.value() + cfg.hunger_increment);
}

// Loneliness falls only while grazing in company; grazing alone or
// searching both raise it.
inline EmotionValue update_loneliness(EmotionValue l, const LocalView& view, const SimConfig& cfg) {
    if (view.is_grazing && view.grazing_companions >= 1)
        return clamp_emotion(l.value() - cfg.loneliness_decrement);
    return clamp_emotion(l.value() + cfg.loneliness_increment);
}

inline EmotionState classify_emotion(EmotionValue h, EmotionValue l, const SimConfig& cfg) {
    return EmotionState{
        h.value() <= cfg.satiation_threshold ? HungerLevel::Satiated : HungerLevel::Hungry,
        l.value() <= cfg.loneliness_threshold ? LonelinessLevel::Low : LonelinessLevel::High,
    };
}

// Invite gate for all three heuristics. Only a grazing robot ever invites.
inline bool invite_decision(Heuristic kind, const EmotionState& state, const LocalView& view) {
    switch (kind) {
        case Heuristic::RandomOnly:
            return false;
        case Heuristic::ImmediateInvite:
            return view.is_grazing;
        case Heuristic::HungerLoneliness:
            return view.is_grazing && state.hunger_level == HungerLevel::Satiated &&
                   state.loneliness_level == LonelinessLevel::High;
    }
    return false;
}

}  // namespace forage
