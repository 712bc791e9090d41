#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hubsim/money.hpp"
#include "hubsim/network.hpp"

namespace hubsim {

/// Simulation time in whole minutes since the epoch (midnight). Non-negative.
using Tick = std::int64_t;

/// Per-truck delivery task and limits.
struct TruckSpec {
    TruckId id = 0;
    Route route;
    Tick start_tick = 0;     // arrival at the origin hub
    Tick deadline_tick = 0;  // latest permitted arrival at the destination
    int wait_min = 0;        // least waiting time at every decision hub
    int wait_max_per_hub = 0;
    int wait_budget_total = 0;  // trip-wide waiting cap
    Money xi_per_min;           // platooning benefit per partner per travel minute
    Money eps_per_min;          // waiting cost per minute

    /// Decision hubs on the route (every hub but the destination).
    int decision_hubs() const { return route.length() - 1; }

    /// Throws ScenarioInvalid naming the violated invariant.
    void validate() const;
};

/// Where a truck is (or is headed) and what it has spent so far.
struct TruckState {
    int hub_index = 0;    // k; during a traversal this is already the target hub
    Tick arrival_tick = 0;  // arrival time at hub_index (may lie in the future)
    int wait_used = 0;      // realized waiting minutes so far
    std::optional<Tick> committed_departure;
};

/// Waiting minutes for the current and all remaining decision hubs.
struct WaitPlan {
    std::vector<int> waits;

    int total_wait() const;
    int horizon() const { return static_cast<int>(waits.size()); }
};

/// Arrival at the next hub: arrival + wait + travel. wait >= 0, travel > 0.
Tick advance(Tick arrival, int wait, int travel);

/// One (hub, departure, next hub) entry per decision hub for a plan of all
/// zero waits starting at start_tick.
struct PlannedDeparture {
    HubId hub = 0;
    Tick departure = 0;
    HubId next_hub = 0;
};
std::vector<PlannedDeparture> zero_wait_trajectory(const TruckSpec& spec);

/// The shared store of predicted and realized hub departure times — the only
/// information trucks exchange. One entry per decision hub of each route.
class PredictionBoard {
public:
    struct Entry {
        Tick departure = 0;
        bool realized = false;
    };

    /// Registers a truck and posts its least-feasible-wait trajectory
    /// (all waits = wait_min; plain zero-wait when wait_min is 0).
    void register_truck(const TruckSpec& spec);

    bool has_truck(TruckId id) const { return boards_.count(id) != 0; }

    /// Replaces the entries for hubs current_k..N-2 with the departures the
    /// plan implies. Earlier (realized) entries are preserved.
    /// Throws InfeasiblePlan if the plan violates the truck's constraints.
    void apply_plan(const TruckSpec& spec, const TruckState& state, const WaitPlan& plan);

    /// Marks the entry at route index k as a realized departure.
    void mark_realized(TruckId truck, int k);

    const Entry& entry(TruckId truck, int k) const;

    /// The truck's departure tick from `hub` toward `toward` falling inside
    /// [window_first, window_last], if any. Ordinal occurrences of a revisited
    /// hub are disambiguated by the window.
    std::optional<Tick> departure_of(TruckId truck, HubId hub, HubId toward,
                                     Tick window_first, Tick window_last) const;

    /// All departure ticks (realized or predicted) of `truck` from `hub`
    /// toward `toward`, in route order.
    std::vector<Tick> departures_from(TruckId truck, HubId hub, HubId toward) const;

private:
    struct TruckBoard {
        std::vector<HubId> hubs;  // copy of the route's hub sequence
        std::vector<Entry> entries;  // one per decision hub
    };
    std::unordered_map<TruckId, TruckBoard> boards_;
};

/// Feasibility check shared by the board and the solver: per-hub bounds,
/// trip budget and deadline for a plan starting at `state`.
/// Returns an explanation for the violation, or nullopt when feasible.
std::optional<std::string> plan_violation(const TruckSpec& spec, const TruckState& state,
                                          const WaitPlan& plan);

/// Spec'd free-function form of PredictionBoard::apply_plan.
inline void board_update(PredictionBoard& board, const TruckSpec& spec, const TruckState& state,
                         const WaitPlan& plan) {
    board.apply_plan(spec, state, plan);
}

}  // namespace hubsim
