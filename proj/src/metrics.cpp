#include "forage/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace forage {

std::optional<double> compute_nu(std::int64_t content_removed, double invite_power,
                                 std::int64_t invite_ticks) {
    if (content_removed < 0 || invite_ticks < 0 || invite_power <= 0)
        throw std::invalid_argument("compute_nu: negative input or non-positive power");
    if (invite_ticks == 0) return std::nullopt;
    return static_cast<double>(content_removed) /
           (invite_power * static_cast<double>(invite_ticks));
}

double percent_removed(std::int64_t content_removed, std::int64_t initial_total) {
    if (initial_total <= 0 || content_removed < 0 || content_removed > initial_total)
        throw std::invalid_argument("percent_removed: out of range");
    return 100.0 * static_cast<double>(content_removed) / static_cast<double>(initial_total);
}

namespace {

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n % 2 == 1) return v[n / 2];
    return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

AggregateStats aggregate_runs(const std::vector<RunRecord>& records) {
    if (records.empty()) throw std::invalid_argument("aggregate_runs: empty record list");
    for (const auto& r : records) {
        if (r.config_digest != records.front().config_digest)
            throw std::invalid_argument("aggregate_runs: mixed config digests");
    }
    AggregateStats stats;
    stats.runs = static_cast<int>(records.size());
    std::vector<double> percents, nus;
    for (const auto& r : records) {
        percents.push_back(r.percent_removed);
        if (r.nu) {
            nus.push_back(*r.nu);
        } else {
            ++stats.nu_undefined_count;
        }
        if (r.percent_removed >= 50.0) ++stats.runs_at_least_half_removed;
    }
    // summing in sorted order keeps the stats permutation invariant
    std::sort(percents.begin(), percents.end());
    std::sort(nus.begin(), nus.end());
    double sum = 0;
    for (double p : percents) sum += p;
    stats.mean_percent_removed = sum / percents.size();
    stats.median_percent_removed = median_of(percents);
    stats.min_percent_removed = percents.front();
    stats.max_percent_removed = percents.back();
    if (!nus.empty()) {
        double nsum = 0;
        for (double v : nus) nsum += v;
        stats.mean_nu = nsum / nus.size();
        stats.median_nu = median_of(nus);
    }
    return stats;
}

}  // namespace forage
