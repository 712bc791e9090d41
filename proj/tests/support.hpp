#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hubsim/io.hpp"
#include "hubsim/scenario.hpp"
#include "hubsim/simulator.hpp"
#include "hubsim/solver.hpp"

namespace hubsim::testing {

// Hubs 1..n+1 chained by forward segments with the given travel minutes.
inline Network line_network(const std::vector<int>& minutes) {
    const int n = static_cast<int>(minutes.size()) + 1;
    std::vector<Hub> hubs;
    for (int i = 1; i <= n; ++i) hubs.push_back({i, "H" + std::to_string(i), {}, {}});
    std::vector<Segment> segments;
    for (int i = 0; i + 1 < n; ++i) segments.push_back({i + 1, i + 2, minutes[i]});
    return build_network(hubs, segments);
}

inline TruckSpec basic_truck(TruckId id, const Network& net, std::vector<HubId> hubs) {
    TruckSpec spec;
    spec.id = id;
    spec.route = make_route(net, id, std::move(hubs));
    spec.start_tick = 0;
    spec.wait_min = 0;
    spec.wait_max_per_hub = 30;
    spec.wait_budget_total = 60;
    spec.deadline_tick = spec.route.total_minutes() + spec.wait_budget_total;
    spec.xi_per_min = Money::from_cents(96);
    spec.eps_per_min = Money::from_cents(75);
    return spec;
}

// The worked two-truck case: a three-hub line with 60-minute segments.
// Truck 2's waits are pinned to exactly 10 minutes per hub, so its posted
// trajectory departs hub 1 at tick 10 and hub 2 at tick 80; truck 1 is free
// to wait up to 30 minutes per hub within a 60-minute budget.
inline Scenario pair_scenario() {
    Scenario s;
    s.network = line_network({60, 60});
    TruckSpec t1 = basic_truck(1, s.network, {1, 2, 3});
    t1.deadline_tick = 180;
    TruckSpec t2 = basic_truck(2, s.network, {1, 2, 3});
    t2.wait_min = 10;
    t2.wait_max_per_hub = 10;
    t2.wait_budget_total = 20;
    t2.deadline_tick = 140;
    s.trucks = {t1, t2};
    return s;
}

// Solver fixture matching pair_scenario from truck 1's point of view at its
// origin: the board holds truck 2's registered least-wait trajectory.
struct SolveFixture {
    Network net = line_network({60, 60});
    TruckSpec spec;
    TruckSpec partner;
    TruckState state;
    PredictionBoard board;
    PartnerIndex partners;

    SolveFixture() {
        const Scenario s = pair_scenario();
        spec = s.trucks[0];
        partner = s.trucks[1];
        spec.route = make_route(net, 1, {1, 2, 3});
        partner.route = make_route(net, 2, {1, 2, 3});
        board.register_truck(spec);
        board.register_truck(partner);
        partners = build_partner_index({spec.route, partner.route});
        state.hub_index = 0;
        state.arrival_tick = 0;
        state.wait_used = 0;
    }
};

// One randomized solver instance: a 2-5 hub line route, a consistent
// mid-journey state, and 0-5 single-segment partner trucks per remaining hub
// whose posted departures cluster around the subject's feasible windows.
struct RandomInstance {
    Network net;
    TruckSpec spec;
    TruckState state;
    int k = 0;
    PredictionBoard board;
    PartnerIndex partners;
    std::vector<TruckSpec> partner_specs;
};

inline RandomInstance random_instance(std::mt19937_64& rng) {
    auto irand = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    RandomInstance inst;
    const int hub_count = irand(2, 5);
    std::vector<int> minutes;
    for (int i = 0; i + 1 < hub_count; ++i) minutes.push_back(irand(10, 120));
    inst.net = line_network(minutes);

    std::vector<HubId> hubs;
    for (int i = 1; i <= hub_count; ++i) hubs.push_back(i);
    TruckSpec& spec = inst.spec;
    spec.id = 1;
    spec.route = make_route(inst.net, 1, hubs);
    const int decisions = spec.decision_hubs();
    spec.wait_min = irand(0, 3);
    spec.wait_max_per_hub = irand(spec.wait_min, 30);
    spec.wait_budget_total = irand(spec.wait_min * decisions, 60);
    spec.start_tick = irand(0, 540);
    spec.xi_per_min = Money::from_cents(irand(0, 200));
    spec.eps_per_min = Money::from_cents(irand(0, 150));

    // Walk a feasible prefix to hub k, spending waits the budget allows.
    inst.k = irand(0, decisions - 1);
    Tick arrival = spec.start_tick;
    int used = 0;
    for (int h = 0; h < inst.k; ++h) {
        const int keep = spec.wait_min * (decisions - h - 1);
        const int extra =
            std::min(spec.wait_max_per_hub, spec.wait_budget_total - used - keep) - spec.wait_min;
        const int w = spec.wait_min + irand(0, extra);
        used += w;
        arrival += w + spec.route.segment_minutes[h];
    }
    inst.state.hub_index = inst.k;
    inst.state.arrival_tick = arrival;
    inst.state.wait_used = used;

    const int horizon = decisions - inst.k;
    Tick zero_wait_final = arrival;
    for (int h = inst.k; h < decisions; ++h) zero_wait_final += spec.route.segment_minutes[h];
    spec.deadline_tick = zero_wait_final + spec.wait_min * horizon + irand(0, 80);

    inst.board.register_truck(spec);
    std::vector<Route> routes{spec.route};
    const std::vector<DepartureWindow> windows = candidate_window(spec, inst.k, inst.state);

    TruckId next_id = 2;
    for (int h = 0; h < horizon; ++h) {
        const int m = inst.k + h;
        const int count = irand(0, 5);
        for (int c = 0; c < count; ++c) {
            TruckSpec p;
            p.id = next_id++;
            p.route = make_route(inst.net, p.id, {spec.route.hubs[m], spec.route.hubs[m + 1]});
            const Tick lo = std::max<Tick>(0, windows[h].earliest - 3);
            const Tick hi = windows[h].latest + 3;
            p.start_tick = lo + irand(0, static_cast<int>(hi - lo));
            p.wait_min = 0;
            p.wait_max_per_hub = 0;
            p.wait_budget_total = 0;
            p.deadline_tick = p.start_tick + p.route.total_minutes();
            p.xi_per_min = spec.xi_per_min;
            p.eps_per_min = spec.eps_per_min;
            inst.board.register_truck(p);
            if (p.start_tick < arrival && (rng() & 1)) inst.board.mark_realized(p.id, 0);
            routes.push_back(p.route);
            inst.partner_specs.push_back(std::move(p));
        }
    }
    inst.partners = build_partner_index(routes);
    return inst;
}

// Checks every log-level invariant against the scenario that produced it.
// Returns human-readable violations; empty means the log is sound.
inline std::vector<std::string> check_log(const Scenario& scenario, const SimulationLog& log) {
    std::vector<std::string> bad;
    auto fail = [&](const std::string& msg) { bad.push_back(msg); };

    std::vector<Route> routes;
    for (const TruckSpec& t : scenario.trucks) routes.push_back(t.route);
    const PartnerIndex index = build_partner_index(routes);

    std::map<TruckId, std::vector<const DepartureEvent*>> deps;
    for (const DepartureEvent& d : log.departures) deps[d.truck].push_back(&d);
    std::map<TruckId, std::vector<const SolveRecord*>> solves;
    for (const SolveRecord& s : log.solves) solves[s.truck].push_back(&s);

    for (const TruckSpec& spec : scenario.trucks) {
        const std::string who = "truck " + std::to_string(spec.id) + ": ";
        const int decisions = spec.decision_hubs();
        const auto& my_solves = solves[spec.id];
        const auto& my_deps = deps[spec.id];

        // one solve per non-destination arrival, in route order
        if (static_cast<int>(my_solves.size()) != decisions)
            fail(who + "expected " + std::to_string(decisions) + " solves, saw " +
                 std::to_string(my_solves.size()));
        if (static_cast<int>(my_deps.size()) != decisions) {
            fail(who + "expected " + std::to_string(decisions) + " departures, saw " +
                 std::to_string(my_deps.size()));
            continue;
        }

        Tick arrival = spec.start_tick;
        int total_wait = 0;
        for (int k = 0; k < decisions; ++k) {
            if (static_cast<int>(my_solves.size()) == decisions) {
                const SolveRecord& s = *my_solves[k];
                if (s.hub_index != k) fail(who + "solve out of route order");
                if (s.tick != arrival)
                    fail(who + "solve at hub index " + std::to_string(k) +
                         " fired at tick " + std::to_string(s.tick) + ", arrival was " +
                         std::to_string(arrival));
                for (int h = 0; h < s.partner_sets.horizon(); ++h) {
                    const auto& universe = index.partners(spec.id, k + h);
                    for (TruckId j : s.partner_sets.per_offset[h])
                        if (!std::binary_search(universe.begin(), universe.end(), j))
                            fail(who + "predicted partner " + std::to_string(j) +
                                 " is not a potential partner");
                }
            }
            const DepartureEvent& d = *my_deps[k];
            if (d.hub != spec.route.hubs[k] || d.next_hub != spec.route.hubs[k + 1])
                fail(who + "departure " + std::to_string(k) + " leaves the route");
            const Tick wait = d.tick - arrival;
            if (wait < spec.wait_min || wait > spec.wait_max_per_hub)
                fail(who + "wait " + std::to_string(wait) + " at hub index " +
                     std::to_string(k) + " violates the per-hub bounds");
            total_wait += static_cast<int>(wait);
            arrival = d.tick + spec.route.segment_minutes[k];
        }
        if (total_wait > spec.wait_budget_total) fail(who + "trip wait exceeds the budget");
        if (arrival > spec.deadline_tick) fail(who + "final arrival misses the deadline");

        const auto it = log.outcomes.find(spec.id);
        if (it == log.outcomes.end() || !it->second.finished) {
            fail(who + "no finished outcome");
            continue;
        }
        const TruckOutcome& out = it->second;
        if (out.finish_tick != arrival) fail(who + "finish tick disagrees with the event walk");
        if (out.total_wait != total_wait) fail(who + "recorded wait disagrees");
        if (out.travel_minutes != spec.route.total_minutes())
            fail(who + "recorded travel time disagrees with the route");
        if (out.total_wait !=
            static_cast<int>(out.finish_tick - spec.start_tick) - out.travel_minutes)
            fail(who + "wait + travel does not span the trip");
        if (out.platoon_minutes > out.travel_minutes)
            fail(who + "more platoon minutes than travel minutes");
    }

    // platoon records are exactly the same-segment same-tick departure groups
    const std::vector<PlatoonRecord> expect = realize_platoons(log.departures);
    if (expect.size() != log.platoons.size()) {
        fail("platoon record count " + std::to_string(log.platoons.size()) + ", regrouping gives " +
             std::to_string(expect.size()));
    } else {
        for (std::size_t i = 0; i < expect.size(); ++i) {
            const PlatoonRecord& a = expect[i];
            const PlatoonRecord& b = log.platoons[i];
            if (a.from != b.from || a.to != b.to || a.departure_tick != b.departure_tick ||
                a.members != b.members || a.travel_minutes != b.travel_minutes)
                fail("platoon record " + std::to_string(i) + " disagrees with regrouping");
        }
    }

    // per-truck platoon minutes and realized utility recomputed from records
    std::map<TruckId, int> platoon_minutes;
    std::map<TruckId, Money> reward;
    std::map<TruckId, const TruckSpec*> spec_of;
    for (const TruckSpec& t : scenario.trucks) spec_of[t.id] = &t;
    for (const PlatoonRecord& p : log.platoons) {
        if (p.members.size() < 2) fail("platoon with fewer than two members");
        const int n = static_cast<int>(p.members.size());
        for (TruckId id : p.members) {
            platoon_minutes[id] += p.travel_minutes;
            reward[id] +=
                spec_of.at(id)->xi_per_min.times_minutes(p.travel_minutes).times_ratio(n - 1, n);
        }
    }
    for (const TruckSpec& t : scenario.trucks) {
        const auto it = log.outcomes.find(t.id);
        if (it == log.outcomes.end() || !it->second.finished) continue;
        const std::string who = "truck " + std::to_string(t.id) + ": ";
        if (it->second.platoon_minutes != platoon_minutes[t.id])
            fail(who + "platoon minutes disagree with the platoon records");
        const Money expect_utility =
            reward[t.id] - t.eps_per_min.times_minutes(it->second.total_wait);
        if (it->second.realized_utility != expect_utility)
            fail(who + "realized utility disagrees with recomputation");
    }
    return bad;
}

}  // namespace hubsim::testing
