#pragma once

#include <algorithm>

namespace forage {

// Drive variable bounded to [1, 100]. Construction clamps, so an
// EmotionValue is always in range.
class EmotionValue {
  public:
    static constexpr double kMin = 1.0;
    static constexpr double kMax = 100.0;

    EmotionValue() : v_(kMin) {}
    explicit EmotionValue(double v) : v_(std::clamp(v, kMin, kMax)) {}

    double value() const { return v_; }
    bool operator==(const EmotionValue& o) const { return v_ == o.v_; }

  private:
    double v_;
};

inline EmotionValue clamp_emotion(double v) { return EmotionValue(v); }

enum class HungerLevel { Satiated, Hungry };
enum class LonelinessLevel { Low, High };

struct EmotionState {
    HungerLevel hunger_level;
    LonelinessLevel loneliness_level;

    bool operator==(const EmotionState&) const = default;
};

}  // namespace forage
