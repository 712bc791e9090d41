#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hubsim/fleet.hpp"
#include "hubsim/money.hpp"
#include "hubsim/network.hpp"
#include "hubsim/solver.hpp"

namespace hubsim {

// A complete, runnable instance: the road network plus every truck's spec.
// The seed is carried along for provenance; the simulation itself draws no
// random numbers.
struct Scenario {
    Network network;
    std::vector<TruckSpec> trucks;
    std::uint64_t seed = 0;
};

enum class EventKind { Arrive, Decide, Depart, PlatoonForm, Finish };

// One record in the chronological event stream. Fields beyond (tick, kind)
// are populated per kind: truck/hub for Arrive, Decide, Depart and Finish;
// next_hub for Depart and PlatoonForm; solve_ms and predicted_utility for
// Decide; members for PlatoonForm.
struct Event {
    Tick tick = 0;
    EventKind kind = EventKind::Arrive;
    TruckId truck = 0;
    HubId hub = 0;
    HubId next_hub = 0;
    double solve_ms = 0.0;
    Money predicted_utility;
    std::vector<TruckId> members;
};

struct DepartureEvent {
    TruckId truck = 0;
    HubId hub = 0;
    Tick tick = 0;
    HubId next_hub = 0;
    int travel_minutes = 0;
};

// Trucks that left the same hub toward the same next hub at the same tick.
struct PlatoonRecord {
    HubId from = 0;
    HubId to = 0;
    Tick departure_tick = 0;
    std::vector<TruckId> members;  // ascending, size >= 2
    int travel_minutes = 0;
};

// Everything known about one optimization call, kept for auditing: which
// truck solved where, what it planned, and what it predicted.
struct SolveRecord {
    TruckId truck = 0;
    Tick tick = 0;
    HubId hub = 0;
    int hub_index = 0;
    WaitPlan plan;
    Money predicted_utility;
    PartnerSetPrediction partner_sets;
    double solve_ms = 0.0;
};

struct TruckOutcome {
    bool finished = false;
    Tick finish_tick = 0;
    int total_wait = 0;
    int travel_minutes = 0;
    int platoon_minutes = 0;
    Money realized_reward;   // accumulated platoon shares
    Money realized_utility;  // reward minus waiting loss, set on finish
    std::vector<double> solve_ms;

    double mean_solve_ms() const;
};

struct SimulationLog {
    std::vector<Event> events;
    std::vector<DepartureEvent> departures;
    std::vector<PlatoonRecord> platoons;
    std::vector<SolveRecord> solves;
    std::map<TruckId, TruckOutcome> outcomes;
};

struct TruckRuntime {
    TruckSpec spec;
    TruckState state;
    bool finished = false;
};

struct World {
    Tick t_sys = 0;
    std::map<TruckId, TruckRuntime> trucks;
    PredictionBoard board;
    PartnerIndex partners;
    SimulationLog log;
    std::uint64_t rng_seed = 0;
    int finished_count = 0;

    bool all_finished() const { return finished_count == static_cast<int>(trucks.size()); }
};

// Trucks that arrived at a non-destination hub exactly at t_sys and have not
// yet committed a departure there, in ascending id order. These are the
// trucks whose optimization the current tick triggers.
std::vector<TruckId> decision_set(const World& world);

// Validates the scenario, posts every truck's least-wait trajectory to the
// board, sets the clock to the earliest start, and processes that first tick.
World init_world(const Scenario& scenario);

// Advances the clock by one tick and processes it: arrivals fire the trigger,
// triggered trucks solve sequentially (each seeing the board updates of
// lower-numbered trucks in the same tick), due departures execute, and
// same-segment same-tick departures form platoons.
void step(World& world);

// Runs a scenario to completion and returns its log. The loop is bounded by
// the latest deadline; a truck still unfinished past that bound is an
// internal inconsistency and throws.
SimulationLog run(const Scenario& scenario);

// Groups departures by (hub, next hub, tick); groups of two or more become
// platoon records, ordered by (tick, hub, next hub).
std::vector<PlatoonRecord> realize_platoons(const std::vector<DepartureEvent>& departures);

// Realized utility of a finished truck: per traversed segment in a platoon of
// n trucks, a reward share of xi * travel * (n-1)/n, minus eps * total wait.
Money realized_utility(TruckId truck, const SimulationLog& log);

// Fraction of travel minutes spent platooned; waiting counts in neither the
// numerator nor the denominator.
double platooning_rate(TruckId truck, const SimulationLog& log);

}  // namespace hubsim
