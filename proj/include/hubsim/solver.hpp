#pragma once

#include "hubsim/utility.hpp"

namespace hubsim {

/// Outcome of one waiting-time optimization.
struct SolveResult {
    WaitPlan plan;                     // optimal waits for the remaining hubs
    Money utility;                     // value at the optimum
    PartnerSetPrediction partner_sets;  // partners matched by the optimal plan
    double solve_ms = 0.0;             // wall-clock solve duration
};

/// Per remaining hub, the earliest and latest departure tick any feasible plan
/// allows (bounds from the per-hub wait limits, the trip budget and the
/// deadline). Throws DeadlineInfeasible when no feasible plan exists.
struct DepartureWindow {
    Tick earliest = 0;
    Tick latest = 0;
};
std::vector<DepartureWindow> candidate_window(const TruckSpec& spec, int k,
                                              const TruckState& state);

/// Maximizes the predicted utility over all integer-minute wait plans for the
/// remaining route, by dynamic programming over (hub offset, cumulative wait).
/// Globally optimal; ties go to the plan with the least total wait, then the
/// lexicographically smallest wait vector.
/// Throws DeadlineInfeasible when even the least-wait plan misses the deadline.
SolveResult solve_mpc(const TruckSpec& spec, int k, const TruckState& state,
                      const PredictionBoard& board, const PartnerIndex& index);

/// Exhaustive reference: enumerates every feasible wait vector and evaluates
/// it through the utility module. Same tie-break as solve_mpc. Guarded to
/// horizons <= 5 and per-hub wait ranges <= 31 values; throws
/// TooLargeForOracle beyond that.
SolveResult brute_force_oracle(const TruckSpec& spec, int k, const TruckState& state,
                               const PredictionBoard& board, const PartnerIndex& index);

}  // namespace hubsim
