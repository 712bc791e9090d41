#include "hubsim/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

namespace hubsim {

namespace {

struct HorizonBounds {
    int horizon = 0;             // hubs still to decide
    std::vector<Tick> zero_dep;  // all-wait_min departure tick per offset
    std::vector<int> cw_low;     // least cumulative wait per offset
    std::vector<int> cw_high;    // largest cumulative wait per offset
    int cw_final_max = 0;
};

// Cumulative-wait bounds per hub offset from the per-hub cap, the trip-wide
// wait budget, and the delivery deadline.
HorizonBounds bounds_for(const TruckSpec& spec, int k, const TruckState& state) {
    HorizonBounds b;
    b.horizon = spec.decision_hubs() - k;
    if (b.horizon <= 0)
        throw IndexOutOfRange("truck " + std::to_string(spec.id) +
                              " has no decision to make at hub index " + std::to_string(k));

    const int minw = spec.wait_min;
    const int budget_left = spec.wait_budget_total - state.wait_used;
    Tick zero_wait_arrival = state.arrival_tick;
    for (int h = 0; h < b.horizon; ++h) zero_wait_arrival += spec.route.segment_minutes[k + h];
    const Tick slack = spec.deadline_tick - zero_wait_arrival;

    const long long final_max =
        std::min<long long>(budget_left, std::min<long long>(slack, std::numeric_limits<int>::max()));
    if (final_max < static_cast<long long>(minw) * b.horizon)
        throw DeadlineInfeasible(
            "truck " + std::to_string(spec.id) + " at hub index " + std::to_string(k) +
            ": least-wait completion violates the deadline or wait budget (slack " +
            std::to_string(slack) + ", budget left " + std::to_string(budget_left) + ")");
    b.cw_final_max = static_cast<int>(final_max);

    Tick t = state.arrival_tick;
    for (int h = 0; h < b.horizon; ++h) {
        b.zero_dep.push_back(t);
        t += spec.route.segment_minutes[k + h];
        b.cw_low.push_back((h + 1) * minw);
        const int tail_min = (b.horizon - 1 - h) * minw;
        b.cw_high.push_back(std::min((h + 1) * spec.wait_max_per_hub, b.cw_final_max - tail_min));
    }
    return b;
}

}  // namespace

std::vector<DepartureWindow> candidate_window(const TruckSpec& spec, int k,
                                              const TruckState& state) {
    const HorizonBounds b = bounds_for(spec, k, state);
    std::vector<DepartureWindow> windows;
    for (int h = 0; h < b.horizon; ++h)
        windows.push_back({b.zero_dep[h] + b.cw_low[h], b.zero_dep[h] + b.cw_high[h]});
    return windows;
}

SolveResult solve_mpc(const TruckSpec& spec, int k, const TruckState& state,
                      const PredictionBoard& board, const PartnerIndex& index) {
    const auto started = std::chrono::steady_clock::now();
    const HorizonBounds b = bounds_for(spec, k, state);
    const int minw = spec.wait_min;
    const int cap = spec.wait_max_per_hub;
    const std::int64_t eps = spec.eps_per_min.cents;

    // Stage rewards, indexed by cumulative wait: reward[h][cw - cw_low[h]] is
    // the segment reward earned by departing hub k+h at zero_dep[h] + cw.
    std::vector<std::vector<std::int64_t>> reward(b.horizon);
    for (int h = 0; h < b.horizon; ++h) {
        const int m = k + h;
        const int width = b.cw_high[h] - b.cw_low[h] + 1;
        std::vector<int> matches(width, 0);
        const HubId hub = spec.route.hubs[m];
        const HubId toward = spec.route.hubs[m + 1];
        for (TruckId j : index.partners(spec.id, m)) {
            for (Tick d : board.departures_from(j, hub, toward)) {
                const Tick cw = d - b.zero_dep[h];
                if (cw >= b.cw_low[h] && cw <= b.cw_high[h])
                    ++matches[static_cast<int>(cw) - b.cw_low[h]];
            }
        }
        reward[h].resize(width);
        for (int i = 0; i < width; ++i)
            reward[h][i] =
                segment_reward(spec.xi_per_min, spec.route.segment_minutes[m], matches[i]).cents;
    }

    // Backward pass over (hub offset, cumulative wait before the hub).
    // Value is the pair (suffix utility, suffix total wait), utility maximized
    // first, wait minimized among utility-optimal suffixes.
    constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min() / 4;
    struct Cell {
        std::int64_t util = kNegInf;
        int wait = 0;
    };
    // prev_low[h] / prev_high[h]: cumulative-wait range entering hub h.
    auto prev_low = [&](int h) { return h == 0 ? 0 : b.cw_low[h - 1]; };
    auto prev_high = [&](int h) { return h == 0 ? 0 : b.cw_high[h - 1]; };

    std::vector<std::vector<Cell>> value(b.horizon + 1);
    value[b.horizon].assign(prev_high(b.horizon) - prev_low(b.horizon) + 1, Cell{0, 0});
    for (int h = b.horizon - 1; h >= 0; --h) {
        const int lo = prev_low(h), hi = prev_high(h);
        value[h].assign(hi - lo + 1, Cell{});
        for (int cw_prev = lo; cw_prev <= hi; ++cw_prev) {
            Cell best;
            for (int w = minw; w <= cap; ++w) {
                const int cw = cw_prev + w;
                if (cw > b.cw_high[h]) break;
                const Cell& next = value[h + 1][cw - prev_low(h + 1)];
                if (next.util == kNegInf) continue;
                const std::int64_t u = reward[h][cw - b.cw_low[h]] - eps * w + next.util;
                const int tw = w + next.wait;
                if (u > best.util || (u == best.util && tw < best.wait)) best = {u, tw};
            }
            value[h][cw_prev - lo] = best;
        }
    }

    const Cell root = value[0][0];
    if (root.util == kNegInf)  // bounds_for guarantees a feasible plan
        throw Error("internal: no feasible plan despite feasible bounds");

    // Greedy reconstruction: smallest wait preserving both value components
    // gives the lexicographically smallest optimal plan.
    WaitPlan plan;
    int cw_prev = 0;
    for (int h = 0; h < b.horizon; ++h) {
        const Cell& want = value[h][cw_prev - prev_low(h)];
        for (int w = minw; w <= cap; ++w) {
            const int cw = cw_prev + w;
            if (cw > b.cw_high[h]) break;
            const Cell& next = value[h + 1][cw - prev_low(h + 1)];
            if (next.util == kNegInf) continue;
            const std::int64_t u = reward[h][cw - b.cw_low[h]] - eps * w + next.util;
            if (u == want.util && w + next.wait == want.wait) {
                plan.waits.push_back(w);
                cw_prev = cw;
                break;
            }
        }
    }
    if (plan.horizon() != b.horizon)
        throw Error("internal: plan reconstruction lost a hub");
    SolveResult result;
    result.plan = std::move(plan);
    UtilityResult check = utility(spec, k, result.plan, state, board, index);
    if (check.value.cents != root.util)
        throw Error("internal: reconstructed plan disagrees with the table optimum");
    result.utility = check.value;
    result.partner_sets = std::move(check.partner_sets);
    result.solve_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return result;
}

SolveResult brute_force_oracle(const TruckSpec& spec, int k, const TruckState& state,
                               const PredictionBoard& board, const PartnerIndex& index) {
    const auto started = std::chrono::steady_clock::now();
    const HorizonBounds b = bounds_for(spec, k, state);
    if (b.horizon > 5)
        throw TooLargeForOracle("horizon " + std::to_string(b.horizon) + " exceeds 5");
    if (spec.wait_max_per_hub - spec.wait_min + 1 > 31)
        throw TooLargeForOracle("per-hub wait range exceeds 31 values");

    WaitPlan candidate;
    candidate.waits.assign(b.horizon, 0);
    SolveResult best;
    bool found = false;

    // Depth-first over wait vectors in lexicographic order; first hit wins
    // ties, which realizes the lexicographic tie-break for free.
    auto enumerate = [&](auto&& self, int h, int cw) -> void {
        if (h == b.horizon) {
            UtilityResult u = utility(spec, k, candidate, state, board, index);
            const int tw = candidate.total_wait();
            if (!found || u.value > best.utility ||
                (u.value == best.utility && tw < best.plan.total_wait())) {
                best.plan = candidate;
                best.utility = u.value;
                best.partner_sets = std::move(u.partner_sets);
                found = true;
            }
            return;
        }
        for (int w = spec.wait_min; w <= spec.wait_max_per_hub; ++w) {
            if (cw + w > b.cw_high[h]) break;
            candidate.waits[h] = w;
            self(self, h + 1, cw + w);
        }
    };
    enumerate(enumerate, 0, 0);

    if (!found)
        throw DeadlineInfeasible("truck " + std::to_string(spec.id) + ": no feasible plan");
    best.solve_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return best;
}

}  // namespace hubsim
