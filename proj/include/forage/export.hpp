#pragma once

#include <string>
#include <vector>

#include "forage/harness.hpp"

namespace forage {

// Shortest round-trip decimal rendering, locale independent.
std::string format_double(double v);

// CSV with header, one row per run, sorted by (heuristic, case, run_index).
// nu renders as "undefined" when the run paid no invite cost.
std::string runs_csv(const std::vector<LabeledRun>& runs, double invite_power);

// Per-cell AggregateStats as a JSON document.
std::string summary_json(const std::vector<CellStats>& cells);

// Resolved config, seeds, and tool version; enough to re-produce the runs file.
std::string manifest_json(const ExperimentPlan& plan, const std::string& tool_version);

// Per-tick per-robot trace rows for one run. Header written by the caller
// via trace_csv_header().
std::string trace_csv_header();
std::string trace_csv_rows(const WorldState& world);

// Throws SetupError when the destination is unwritable.
void write_file(const std::string& path, const std::string& contents);

}  // namespace forage
