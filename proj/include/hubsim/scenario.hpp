#pragma once

#include <cstdint>
#include <string>

#include "hubsim/simulator.hpp"

namespace hubsim {

// Knobs for randomized scenario generation. The defaults are the reference
// operating point: morning start window (ticks are minutes since midnight),
// a 30-minute per-hub waiting cap, a one-hour trip-wide budget, and rates of
// 0.96 / 0.75 SEK per minute.
struct ScenarioConfig {
    std::string network_file;  // provenance; the network is loaded upstream
    int trucks = 1;
    Tick window_first = 480;  // 8:00 a.m.
    Tick window_last = 540;   // 9:00 a.m.
    int wait_max_per_hub = 30;
    int wait_budget_total = 60;
    double xi_per_min_sek = 0.96;
    double eps_per_min_sek = 0.75;
    std::uint64_t seed = 0;

    // Throws ScenarioInvalid naming the violated constraint.
    void validate() const;
};

// Draws `trucks` trucks with random origin/destination hubs (distinct,
// connected; unreachable pairs are resampled with a bounded retry count),
// cheapest routes, uniform start ticks in the window, and deadlines equal to
// the zero-wait arrival plus the waiting budget. Deterministic under seed.
Scenario generate_scenario(const Network& net, const ScenarioConfig& config);

// Random geometric hub graph over a compact region: hubs are scattered in a
// lat/lon box, each connects bidirectionally to its nearest neighbors,
// components are bridged by their closest hub pairs, and travel time is
// great-circle distance at 80 km/h, rounded to whole minutes.
Network synthetic_network(int hub_count, std::uint64_t seed);

}  // namespace hubsim
