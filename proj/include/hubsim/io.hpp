#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hubsim/simulator.hpp"

namespace hubsim {

// ---- scenario inputs -------------------------------------------------------

// Reads {"hubs": [{id, name, lat?, lon?}...], "segments": [{from, to,
// travel_minutes}...]}. Throws ScenarioInvalid naming the path on missing or
// malformed input; network validation errors propagate.
Network load_network(const std::string& path);
void save_network(const Network& net, const std::string& path);

// Reads an array of truck records: {id, origin, destination, start_tick,
// deadline_tick, wait_max_per_hub, wait_budget_total, xi_per_min, eps_per_min}
// plus an optional wait_min (default 0). Money fields are SEK per minute.
// Routes are planned as the cheapest origin->destination path; every record
// is validated.
std::vector<TruckSpec> load_trucks(const std::string& path, const Network& net);
void save_trucks(const std::vector<TruckSpec>& trucks, const std::string& path);

// A scenario directory holds network.json, trucks.json and scenario.json
// (seed and provenance).
Scenario load_scenario(const std::string& dir);
void save_scenario(const Scenario& scenario, const std::string& dir);

// ---- simulation outputs ----------------------------------------------------

// One line per event:
//   <tick> ARRIVE truck=<id> hub=<id>
//   <tick> DECIDE truck=<id> hub=<id> solve_ms=<ms> utility_cents=<cents>
//   <tick> DEPART truck=<id> hub=<id> next=<id>
//   <tick> PLATOON_FORM hub=<id> next=<id> trucks=<id>,<id>[,...]
//   <tick> FINISH truck=<id> hub=<id>
// Durations are floored to whole milliseconds; utilities are exact hundredths.
void write_event_log(const std::vector<Event>& events, const std::string& path);
std::vector<Event> read_event_log(const std::string& path);

// One per-truck result row, holding exactly what the CSV holds: the rate is
// pre-rounded to six decimals and the solve time floored to whole
// milliseconds, so aggregates recomputed from the file match exactly.
struct MetricsRow {
    TruckId truck_id = 0;
    Money utility;
    int total_wait_min = 0;
    int travel_min = 0;
    int platoon_min = 0;
    double platooning_rate = 0.0;
    std::int64_t mean_solve_ms = 0;
};

// Rows for every truck in the log, ascending by id.
// Throws TruckNotFinished if any truck is still en route.
std::vector<MetricsRow> metrics_rows(const SimulationLog& log);

// Header: truck_id,utility_sek,total_wait_min,travel_min,platoon_min,
// platooning_rate,mean_solve_ms
void write_metrics_csv(const std::vector<MetricsRow>& rows, const std::string& path);
std::vector<MetricsRow> read_metrics_csv(const std::string& path);

// Unweighted means over the per-truck rows, each rounded to six decimals.
struct Summary {
    double mean_wait_min = 0.0;
    double mean_platooning_rate = 0.0;
    double frac_nonzero_utility = 0.0;
    double mean_solve_ms = 0.0;
    int total_trucks = 0;
};

Summary summarize(const std::vector<MetricsRow>& rows);
void write_summary(const Summary& summary, const std::string& path);
Summary read_summary(const std::string& path);

// Nearest multiple of 1e-6, half away from zero.
double round6(double x);

}  // namespace hubsim
