#include "hubsim/fleet.hpp"

#include <numeric>
#include <string>

namespace hubsim {

void TruckSpec::validate() const {
    const std::string who = "truck " + std::to_string(id) + ": ";
    if (id < 1) throw ScenarioInvalid(who + "truck ids must be >= 1");
    if (route.length() < 2) throw ScenarioInvalid(who + "route needs at least two hubs");
    if (start_tick < 0) throw ScenarioInvalid(who + "start_tick must be >= 0");
    if (wait_min < 0) throw ScenarioInvalid(who + "wait_min must be >= 0");
    if (wait_min > wait_max_per_hub)
        throw ScenarioInvalid(who + "wait_min exceeds wait_max_per_hub");
    if (wait_budget_total < 0) throw ScenarioInvalid(who + "wait_budget_total must be >= 0");
    if (wait_min * decision_hubs() > wait_budget_total)
        throw ScenarioInvalid(who + "wait_min over all hubs exceeds wait_budget_total");
    if (xi_per_min.cents < 0) throw ScenarioInvalid(who + "xi_per_min must be >= 0");
    if (eps_per_min.cents < 0) throw ScenarioInvalid(who + "eps_per_min must be >= 0");
    const Tick least_arrival =
        start_tick + route.total_minutes() + static_cast<Tick>(wait_min) * decision_hubs();
    if (deadline_tick < least_arrival)
        throw ScenarioInvalid(who + "deadline_tick " + std::to_string(deadline_tick) +
                              " is before the least feasible arrival " +
                              std::to_string(least_arrival));
}

int WaitPlan::total_wait() const {
    return std::accumulate(waits.begin(), waits.end(), 0);
}

Tick advance(Tick arrival, int wait, int travel) {
    if (wait < 0) throw InfeasiblePlan("negative waiting time");
    if (travel <= 0) throw NonPositiveTravelTime("travel time must be positive");
    return arrival + wait + travel;
}

std::vector<PlannedDeparture> zero_wait_trajectory(const TruckSpec& spec) {
    std::vector<PlannedDeparture> out;
    Tick t = spec.start_tick;
    for (int k = 0; k + 1 < spec.route.length(); ++k) {
        out.push_back({spec.route.hubs[k], t, spec.route.hubs[k + 1]});
        t += spec.route.segment_minutes[k];
    }
    return out;
}

std::optional<std::string> plan_violation(const TruckSpec& spec, const TruckState& state,
                                          const WaitPlan& plan) {
    const int horizon = spec.decision_hubs() - state.hub_index;
    if (plan.horizon() != horizon)
        return "plan covers " + std::to_string(plan.horizon()) + " hubs, expected " +
               std::to_string(horizon);
    for (int w : plan.waits) {
        if (w < spec.wait_min || w > spec.wait_max_per_hub)
            return "wait " + std::to_string(w) + " outside [" + std::to_string(spec.wait_min) +
                   ", " + std::to_string(spec.wait_max_per_hub) + "]";
    }
    if (state.wait_used + plan.total_wait() > spec.wait_budget_total)
        return "total wait " + std::to_string(state.wait_used + plan.total_wait()) +
               " exceeds budget " + std::to_string(spec.wait_budget_total);
    Tick t = state.arrival_tick;
    for (int h = 0; h < horizon; ++h)
        t = advance(t, plan.waits[h], spec.route.segment_minutes[state.hub_index + h]);
    if (t > spec.deadline_tick)
        return "arrival " + std::to_string(t) + " misses deadline " +
               std::to_string(spec.deadline_tick);
    return std::nullopt;
}

void PredictionBoard::register_truck(const TruckSpec& spec) {
    TruckBoard tb;
    tb.hubs = spec.route.hubs;
    tb.entries.resize(spec.decision_hubs());
    Tick t = spec.start_tick;
    for (int k = 0; k < spec.decision_hubs(); ++k) {
        t += spec.wait_min;
        tb.entries[k].departure = t;
        t += spec.route.segment_minutes[k];
    }
    boards_[spec.id] = std::move(tb);
}

void PredictionBoard::apply_plan(const TruckSpec& spec, const TruckState& state,
                                 const WaitPlan& plan) {
    if (auto why = plan_violation(spec, state, plan))
        throw InfeasiblePlan("truck " + std::to_string(spec.id) + ": " + *why);
    auto it = boards_.find(spec.id);
    if (it == boards_.end())
        throw UnknownTruck("truck " + std::to_string(spec.id) + " is not on the board");
    auto& tb = it->second;
    Tick t = state.arrival_tick;
    for (int h = 0; h < plan.horizon(); ++h) {
        const int k = state.hub_index + h;
        t += plan.waits[h];
        tb.entries[k] = {t, false};
        t += spec.route.segment_minutes[k];
    }
}

void PredictionBoard::mark_realized(TruckId truck, int k) {
    auto it = boards_.find(truck);
    if (it == boards_.end())
        throw UnknownTruck("truck " + std::to_string(truck) + " is not on the board");
    if (k < 0 || k >= static_cast<int>(it->second.entries.size()))
        throw IndexOutOfRange("hub index " + std::to_string(k) + " out of range for truck " +
                              std::to_string(truck));
    it->second.entries[k].realized = true;
}

const PredictionBoard::Entry& PredictionBoard::entry(TruckId truck, int k) const {
    auto it = boards_.find(truck);
    if (it == boards_.end())
        throw UnknownTruck("truck " + std::to_string(truck) + " is not on the board");
    if (k < 0 || k >= static_cast<int>(it->second.entries.size()))
        throw IndexOutOfRange("hub index " + std::to_string(k) + " out of range for truck " +
                              std::to_string(truck));
    return it->second.entries[k];
}

std::optional<Tick> PredictionBoard::departure_of(TruckId truck, HubId hub, HubId toward,
                                                  Tick window_first, Tick window_last) const {
    auto it = boards_.find(truck);
    if (it == boards_.end()) return std::nullopt;
    const TruckBoard& tb = it->second;
    for (std::size_t k = 0; k < tb.entries.size(); ++k) {
        if (tb.hubs[k] != hub || tb.hubs[k + 1] != toward) continue;
        const Tick d = tb.entries[k].departure;
        if (d >= window_first && d <= window_last) return d;
    }
    return std::nullopt;
}

std::vector<Tick> PredictionBoard::departures_from(TruckId truck, HubId hub, HubId toward) const {
    std::vector<Tick> out;
    auto it = boards_.find(truck);
    if (it == boards_.end()) return out;
    const TruckBoard& tb = it->second;
    for (std::size_t k = 0; k < tb.entries.size(); ++k)
        if (tb.hubs[k] == hub && tb.hubs[k + 1] == toward)
            out.push_back(tb.entries[k].departure);
    return out;
}

}  // namespace hubsim
