#include "hubsim/simulator.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>

namespace hubsim {

double TruckOutcome::mean_solve_ms() const {
    if (solve_ms.empty()) return 0.0;
    double sum = 0.0;
    for (double v : solve_ms) sum += v;
    return sum / static_cast<double>(solve_ms.size());
}

namespace {

// Advances the world through tick w.t_sys. Phases run in a fixed order so the
// event stream is canonical: arrivals fire the trigger, triggered trucks solve
// in ascending id (later solves see earlier board updates), due departures
// execute, same-segment departures form platoons, destination arrivals finish.
void process_tick(World& w) {
    const Tick t = w.t_sys;

    const std::vector<TruckId> deciders = decision_set(w);
    std::vector<TruckId> finishers;
    for (auto& [id, tr] : w.trucks) {
        if (tr.finished || tr.state.committed_departure || tr.state.arrival_tick != t) continue;
        Event ev;
        ev.tick = t;
        ev.kind = EventKind::Arrive;
        ev.truck = id;
        ev.hub = tr.spec.route.hubs[tr.state.hub_index];
        w.log.events.push_back(std::move(ev));
        if (tr.state.hub_index == tr.spec.route.last_index()) finishers.push_back(id);
    }

    for (TruckId id : deciders) {
        TruckRuntime& tr = w.trucks.at(id);
        const int k = tr.state.hub_index;
        const HubId hub = tr.spec.route.hubs[k];
        SolveResult r = solve_mpc(tr.spec, k, tr.state, w.board, w.partners);
        tr.state.committed_departure = t + r.plan.waits.front();
        board_update(w.board, tr.spec, tr.state, r.plan);

        Event ev;
        ev.tick = t;
        ev.kind = EventKind::Decide;
        ev.truck = id;
        ev.hub = hub;
        ev.solve_ms = r.solve_ms;
        ev.predicted_utility = r.utility;
        w.log.events.push_back(std::move(ev));
        w.log.outcomes[id].solve_ms.push_back(r.solve_ms);
        w.log.solves.push_back(
            {id, t, hub, k, std::move(r.plan), r.utility, std::move(r.partner_sets), r.solve_ms});
    }

    std::vector<DepartureEvent> departed;
    for (auto& [id, tr] : w.trucks) {
        if (tr.finished || !tr.state.committed_departure || *tr.state.committed_departure != t)
            continue;
        const int k = tr.state.hub_index;
        const HubId hub = tr.spec.route.hubs[k];
        const HubId next = tr.spec.route.hubs[k + 1];
        const int travel = tr.spec.route.segment_minutes[k];
        const int waited = static_cast<int>(t - tr.state.arrival_tick);

        w.board.mark_realized(id, k);
        TruckOutcome& out = w.log.outcomes[id];
        out.total_wait += waited;
        out.travel_minutes += travel;

        tr.state.wait_used += waited;
        tr.state.hub_index = k + 1;
        tr.state.arrival_tick = advance(t, 0, travel);
        tr.state.committed_departure.reset();

        Event ev;
        ev.tick = t;
        ev.kind = EventKind::Depart;
        ev.truck = id;
        ev.hub = hub;
        ev.next_hub = next;
        w.log.events.push_back(std::move(ev));
        departed.push_back({id, hub, t, next, travel});
        w.log.departures.push_back(departed.back());
    }

    std::map<std::pair<HubId, HubId>, std::vector<const DepartureEvent*>> groups;
    for (const DepartureEvent& d : departed) groups[{d.hub, d.next_hub}].push_back(&d);
    for (auto& [seg, deps] : groups) {
        if (deps.size() < 2) continue;
        PlatoonRecord rec;
        rec.from = seg.first;
        rec.to = seg.second;
        rec.departure_tick = t;
        rec.travel_minutes = deps.front()->travel_minutes;
        for (const DepartureEvent* d : deps) rec.members.push_back(d->truck);
        // ascending already: departures were scanned in truck-id order
        const int n = static_cast<int>(rec.members.size());
        for (TruckId id : rec.members) {
            TruckOutcome& out = w.log.outcomes[id];
            out.platoon_minutes += rec.travel_minutes;
            out.realized_reward += w.trucks.at(id)
                                       .spec.xi_per_min.times_minutes(rec.travel_minutes)
                                       .times_ratio(n - 1, n);
        }
        Event ev;
        ev.tick = t;
        ev.kind = EventKind::PlatoonForm;
        ev.hub = rec.from;
        ev.next_hub = rec.to;
        ev.members = rec.members;
        w.log.events.push_back(std::move(ev));
        w.log.platoons.push_back(std::move(rec));
    }

    for (TruckId id : finishers) {
        TruckRuntime& tr = w.trucks.at(id);
        tr.finished = true;
        ++w.finished_count;
        TruckOutcome& out = w.log.outcomes[id];
        out.finished = true;
        out.finish_tick = t;
        out.realized_utility =
            out.realized_reward - tr.spec.eps_per_min.times_minutes(out.total_wait);
        Event ev;
        ev.tick = t;
        ev.kind = EventKind::Finish;
        ev.truck = id;
        ev.hub = tr.spec.route.hubs[tr.state.hub_index];
        w.log.events.push_back(std::move(ev));
    }
}

}  // namespace

std::vector<TruckId> decision_set(const World& world) {
    std::vector<TruckId> out;
    for (const auto& [id, tr] : world.trucks)
        if (!tr.finished && !tr.state.committed_departure &&
            tr.state.arrival_tick == world.t_sys &&
            tr.state.hub_index != tr.spec.route.last_index())
            out.push_back(id);
    return out;
}

World init_world(const Scenario& scenario) {
    World w;
    w.rng_seed = scenario.seed;

    std::vector<Route> routes;
    for (const TruckSpec& spec : scenario.trucks) {
        spec.validate();
        if (spec.route.truck != spec.id)
            throw ScenarioInvalid("truck " + std::to_string(spec.id) +
                                  ": route belongs to truck " + std::to_string(spec.route.truck));
        if (w.trucks.count(spec.id))
            throw ScenarioInvalid("duplicate truck id " + std::to_string(spec.id));
        TruckRuntime tr;
        tr.spec = spec;
        tr.state.hub_index = 0;
        tr.state.arrival_tick = spec.start_tick;
        routes.push_back(spec.route);
        w.trucks.emplace(spec.id, std::move(tr));
        w.log.outcomes.emplace(spec.id, TruckOutcome{});
    }
    w.partners = build_partner_index(routes);
    for (const auto& [id, tr] : w.trucks) w.board.register_truck(tr.spec);

    if (!w.trucks.empty()) {
        Tick first = w.trucks.begin()->second.spec.start_tick;
        for (const auto& [id, tr] : w.trucks) first = std::min(first, tr.spec.start_tick);
        w.t_sys = first;
        process_tick(w);
    }
    return w;
}

void step(World& world) {
    ++world.t_sys;
    process_tick(world);
}

SimulationLog run(const Scenario& scenario) {
    World world = init_world(scenario);
    if (world.trucks.empty()) return std::move(world.log);

    Tick bound = 0;
    for (const auto& [id, tr] : world.trucks)
        bound = std::max(bound, tr.spec.deadline_tick);
    while (!world.all_finished() && world.t_sys < bound) step(world);
    if (!world.all_finished())
        throw Error("simulation stalled: trucks still en route past the latest deadline");
    return std::move(world.log);
}

std::vector<PlatoonRecord> realize_platoons(const std::vector<DepartureEvent>& departures) {
    std::map<std::tuple<Tick, HubId, HubId>, std::vector<const DepartureEvent*>> groups;
    for (const DepartureEvent& d : departures) groups[{d.tick, d.hub, d.next_hub}].push_back(&d);

    std::vector<PlatoonRecord> out;
    for (auto& [key, deps] : groups) {
        if (deps.size() < 2) continue;
        PlatoonRecord rec;
        rec.departure_tick = std::get<0>(key);
        rec.from = std::get<1>(key);
        rec.to = std::get<2>(key);
        rec.travel_minutes = deps.front()->travel_minutes;
        for (const DepartureEvent* d : deps) rec.members.push_back(d->truck);
        std::sort(rec.members.begin(), rec.members.end());
        out.push_back(std::move(rec));
    }
    return out;
}

Money realized_utility(TruckId truck, const SimulationLog& log) {
    auto it = log.outcomes.find(truck);
    if (it == log.outcomes.end() || !it->second.finished)
        throw TruckNotFinished("truck " + std::to_string(truck) +
                               " has not completed its route");
    return it->second.realized_utility;
}

double platooning_rate(TruckId truck, const SimulationLog& log) {
    auto it = log.outcomes.find(truck);
    if (it == log.outcomes.end() || !it->second.finished)
        throw TruckNotFinished("truck " + std::to_string(truck) +
                               " has not completed its route");
    if (it->second.travel_minutes == 0)
        throw ZeroTravelTime("truck " + std::to_string(truck) + " has zero travel time");
    return static_cast<double>(it->second.platoon_minutes) /
           static_cast<double>(it->second.travel_minutes);
}

}  // namespace hubsim
