#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fronts/analysis.hpp"
#include "fronts/config.hpp"

namespace fronts {

struct SweepRow {
    std::vector<double> axis_values;  // one per sweep axis, outer axis first
    bool failed = false;
    std::string error;
    Classification prey = Classification::Undecided;
    Classification predator = Classification::Undecided;
    std::optional<double> g_speed, h_speed;
};

struct SweepResult {
    std::vector<SweepRow> rows;  // ordered by grid index (outer axis major)
};

// Run every grid point of the sweep on a bounded thread pool. Rows that throw
// are marked failed and do not abort the rest; output order is by grid index
// regardless of completion order. FRONTS_LV_THREADS overrides the concurrency
// limit configured in the sweep file.
SweepResult run_sweep(const SweepSpec& spec);

// CSV table: one row per grid point with axis values, labels and speeds.
std::string sweep_table_csv(const SweepSpec& spec, const SweepResult& result);

// Phase-map label for a row: both | prey | predator | none | failed.
std::string sweep_row_label(const SweepRow& row);

}  // namespace fronts
