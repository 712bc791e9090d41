#pragma once

#include "hubsim/fleet.hpp"
#include "hubsim/money.hpp"
#include "hubsim/network.hpp"

namespace hubsim {

/// Predicted platoon partners per horizon offset h (current hub first).
/// Always a subset of the potential partner set at the same hub.
struct PartnerSetPrediction {
    std::vector<std::vector<TruckId>> per_offset;

    int horizon() const { return static_cast<int>(per_offset.size()); }
    int count(int h) const { return static_cast<int>(per_offset[h].size()); }
};

/// Partners whose board departure from each remaining hub equals the departure
/// the plan implies there. Exact tick equality; no tolerance.
PartnerSetPrediction predicted_partner_set(const TruckSpec& spec, int k, const WaitPlan& plan,
                                           const TruckState& state, const PredictionBoard& board,
                                           const PartnerIndex& index);

/// Equal-share platooning benefit for one segment:
/// xi_per_min * travel * n_partners / (n_partners + 1), rounded half to even
/// at the hundredth.
Money segment_reward(Money xi_per_min, int travel_minutes, int n_partners);

/// Sum of segment rewards over the remaining route, using the partner counts
/// predicted for this plan.
Money predicted_reward(const TruckSpec& spec, int k, const PartnerSetPrediction& partner_sets);

/// Waiting cost of the plan: eps_per_min * total waiting minutes.
Money predicted_loss(const TruckSpec& spec, const WaitPlan& plan);

struct UtilityResult {
    Money value;  // predicted reward minus predicted loss
    PartnerSetPrediction partner_sets;
};

/// Utility of a candidate plan. Throws InfeasiblePlan for plans violating the
/// per-hub bounds, the trip budget or the deadline.
UtilityResult utility(const TruckSpec& spec, int k, const WaitPlan& plan, const TruckState& state,
                      const PredictionBoard& board, const PartnerIndex& index);

}  // namespace hubsim
