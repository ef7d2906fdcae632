#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "forage/world.hpp"

namespace forage {

struct AggregateStats {
    int runs = 0;
    double mean_percent_removed = 0.0;
    double median_percent_removed = 0.0;
    double min_percent_removed = 0.0;
    double max_percent_removed = 0.0;
    std::optional<double> mean_nu;    // over runs where nu is defined
    std::optional<double> median_nu;  // over runs where nu is defined
    int runs_at_least_half_removed = 0;
    int nu_undefined_count = 0;
};

// content / (P * invite_ticks); empty when no invite cost was ever paid.
// Throws std::invalid_argument on negative inputs or P <= 0.
std::optional<double> compute_nu(std::int64_t content_removed, double invite_power,
                                 std::int64_t invite_ticks);

// Throws std::invalid_argument when out of range.
double percent_removed(std::int64_t content_removed, std::int64_t initial_total);

// Throws std::invalid_argument on an empty list or mixed config digests.
AggregateStats aggregate_runs(const std::vector<RunRecord>& records);

}  // namespace forage
