#include "hubsim/utility.hpp"

#include <algorithm>

namespace hubsim {

PartnerSetPrediction predicted_partner_set(const TruckSpec& spec, int k, const WaitPlan& plan,
                                           const TruckState& state, const PredictionBoard& board,
                                           const PartnerIndex& index) {
    PartnerSetPrediction sets;
    sets.per_offset.resize(plan.horizon());
    Tick t = state.arrival_tick;
    for (int h = 0; h < plan.horizon(); ++h) {
        const int m = k + h;
        const Tick departure = t + plan.waits[h];
        const HubId hub = spec.route.hubs[m];
        const HubId toward = spec.route.hubs[m + 1];
        for (TruckId j : index.partners(spec.id, m)) {
            const auto deps = board.departures_from(j, hub, toward);
            if (std::find(deps.begin(), deps.end(), departure) != deps.end())
                sets.per_offset[h].push_back(j);
        }
        t = departure + spec.route.segment_minutes[m];
    }
    return sets;
}

Money segment_reward(Money xi_per_min, int travel_minutes, int n_partners) {
    if (n_partners == 0) return Money{};
    return xi_per_min.times_minutes(travel_minutes).times_ratio(n_partners, n_partners + 1);
}

Money predicted_reward(const TruckSpec& spec, int k, const PartnerSetPrediction& partner_sets) {
    Money total;
    for (int h = 0; h < partner_sets.horizon(); ++h)
        total += segment_reward(spec.xi_per_min, spec.route.segment_minutes[k + h],
                                partner_sets.count(h));
    return total;
}

Money predicted_loss(const TruckSpec& spec, const WaitPlan& plan) {
    return spec.eps_per_min.times_minutes(plan.total_wait());
}

UtilityResult utility(const TruckSpec& spec, int k, const WaitPlan& plan, const TruckState& state,
                      const PredictionBoard& board, const PartnerIndex& index) {
    if (auto why = plan_violation(spec, state, plan))
        throw InfeasiblePlan("truck " + std::to_string(spec.id) + ": " + *why);
    UtilityResult result;
    result.partner_sets = predicted_partner_set(spec, k, plan, state, board, index);
    result.value = predicted_reward(spec, k, result.partner_sets) - predicted_loss(spec, plan);
    return result;
}

}  // namespace hubsim
