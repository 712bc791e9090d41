#pragma once

#include <string>
#include <vector>

#include "hubsim/io.hpp"

namespace hubsim {

// Per-truck results ranked for plotting, plus the aggregate summary.
// Aggregates are computed over the rows in truck-id order, exactly as the
// summary written next to the CSV, so the two never disagree.
struct Report {
    std::vector<MetricsRow> rows;  // descending utility, ties by ascending id
    Summary aggregates;
};

// `rows` in truck-id order (as read from a metrics CSV).
Report build_report(std::vector<MetricsRow> rows);

// Reads metrics.csv, summary.json and events.log from a run's output
// directory and cross-checks them: every truck in the CSV must have a FINISH
// event and the summary's truck count must match. Throws IncompleteLog.
Report load_report(const std::string& log_dir);

// Emits ranked two-column series (rank value), one file per metric:
// utilities.dat, waits.dat, rates.dat, travel_minutes.dat,
// platoon_minutes.dat, solve_ms.dat — all in the report's row order, so line
// r of every file describes the same truck — plus summary.json.
void write_report_files(const Report& report, const std::string& out_dir);

}  // namespace hubsim
