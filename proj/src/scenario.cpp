#include "hubsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace hubsim {

namespace {

// Bounded draws are hand-rolled (rejection sampling) so generated scenarios
// do not depend on the standard library's distribution implementations.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

Tick draw_range(std::mt19937_64& rng, Tick lo, Tick hi) {
    return lo + static_cast<Tick>(draw_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

void ScenarioConfig::validate() const {
    if (trucks < 1) throw ScenarioInvalid("truck count must be >= 1");
    if (window_first < 0 || window_first > window_last)
        throw ScenarioInvalid("start window must satisfy 0 <= first <= last");
    if (wait_max_per_hub < 0) throw ScenarioInvalid("wait_max_per_hub must be >= 0");
    if (wait_budget_total < 0) throw ScenarioInvalid("wait_budget_total must be >= 0");
    if (xi_per_min_sek < 0) throw ScenarioInvalid("xi_per_min must be >= 0");
    if (eps_per_min_sek < 0) throw ScenarioInvalid("eps_per_min must be >= 0");
}

Scenario generate_scenario(const Network& net, const ScenarioConfig& config) {
    config.validate();
    const auto& hubs = net.hubs();
    if (hubs.size() < 2) throw ScenarioInvalid("scenario generation needs at least 2 hubs");

    std::mt19937_64 rng(config.seed);
    Scenario scenario;
    scenario.network = net;
    scenario.seed = config.seed;

    constexpr int kMaxResamples = 200;
    for (TruckId id = 1; id <= config.trucks; ++id) {
        TruckSpec spec;
        bool routed = false;
        for (int attempt = 0; attempt < kMaxResamples && !routed; ++attempt) {
            const HubId origin = hubs[draw_below(rng, hubs.size())].id;
            const HubId destination = hubs[draw_below(rng, hubs.size())].id;
            if (origin == destination) continue;
            try {
                spec.route = plan_route(net, origin, destination, id);
                routed = true;
            } catch (const Unreachable&) {
                // disconnected pair; draw again
            }
        }
        if (!routed)
            throw ScenarioInvalid("could not draw a connected origin-destination pair for truck " +
                                  std::to_string(id));
        spec.id = id;
        spec.start_tick = draw_range(rng, config.window_first, config.window_last);
        spec.deadline_tick =
            spec.start_tick + spec.route.total_minutes() + config.wait_budget_total;
        spec.wait_min = 0;
        spec.wait_max_per_hub = config.wait_max_per_hub;
        spec.wait_budget_total = config.wait_budget_total;
        spec.xi_per_min = Money::from_sek(config.xi_per_min_sek);
        spec.eps_per_min = Money::from_sek(config.eps_per_min_sek);
        spec.validate();
        scenario.trucks.push_back(std::move(spec));
    }
    return scenario;
}

namespace {

// Equirectangular approximation; plenty for synthetic geometry.
double distance_km(double lat_a, double lon_a, double lat_b, double lon_b) {
    constexpr double kKmPerLatDegree = 110.57;
    constexpr double kKmPerLonDegree = 111.32;
    const double mean_lat = 0.5 * (lat_a + lat_b) * std::numbers::pi / 180.0;
    const double dy = (lat_a - lat_b) * kKmPerLatDegree;
    const double dx = (lon_a - lon_b) * kKmPerLonDegree * std::cos(mean_lat);
    return std::hypot(dx, dy);
}

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Network synthetic_network(int hub_count, std::uint64_t seed) {
    if (hub_count < 2) throw ScenarioInvalid("synthetic network needs at least 2 hubs");
    const int n = hub_count;

    // A compact region, roughly 410 km north-south by 370 km east-west.  With
    // six-nearest-neighbor edges this yields a dense mesh of short segments:
    // trucks share parts of their shortest paths often enough to platoon
    // regularly, yet alternative routes and short legs keep coordination from
    // dominating every trip.
    constexpr double kLatFirst = 55.3, kLatLast = 59.0;
    constexpr double kLonFirst = 13.0, kLonLast = 19.0;
    constexpr int kNeighbors = 6;
    constexpr double kSpeedKmPerH = 80.0;

    std::mt19937_64 rng(seed);
    std::vector<double> lat(n), lon(n);
    for (int i = 0; i < n; ++i) {
        lat[i] = kLatFirst + (kLatLast - kLatFirst) * draw_unit(rng);
        lon[i] = kLonFirst + (kLonLast - kLonFirst) * draw_unit(rng);
    }
    auto dist = [&](int a, int b) { return distance_km(lat[a], lon[a], lat[b], lon[b]); };

    // Undirected nearest-neighbor edges.
    std::set<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        std::vector<int> order;
        for (int j = 0; j < n; ++j)
            if (j != i) order.push_back(j);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const double da = dist(i, a), db = dist(i, b);
            return da != db ? da < db : a < b;
        });
        for (int m = 0; m < kNeighbors && m < static_cast<int>(order.size()); ++m)
            edges.insert({std::min(i, order[m]), std::max(i, order[m])});
    }

    // Bridge disconnected components through their closest hub pair.
    DisjointSets components(n);
    for (const auto& [a, b] : edges) components.unite(a, b);
    for (;;) {
        const int root = components.find(0);
        int best_a = -1, best_b = -1;
        double best = 0.0;
        for (int a = 0; a < n; ++a) {
            if (components.find(a) != root) continue;
            for (int b = 0; b < n; ++b) {
                if (components.find(b) == root) continue;
                const double d = dist(a, b);
                if (best_a < 0 || d < best) {
                    best = d;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        if (best_a < 0) break;  // single component
        edges.insert({std::min(best_a, best_b), std::max(best_a, best_b)});
        components.unite(best_a, best_b);
    }

    std::vector<Hub> hubs;
    for (int i = 0; i < n; ++i)
        hubs.push_back({i + 1, "H" + std::to_string(i + 1), lat[i], lon[i]});
    std::vector<Segment> segments;
    for (const auto& [a, b] : edges) {
        const int minutes =
            std::max<int>(1, static_cast<int>(std::llround(dist(a, b) / kSpeedKmPerH * 60.0)));
        segments.push_back({a + 1, b + 1, minutes});
        segments.push_back({b + 1, a + 1, minutes});
    }
    return build_network(hubs, segments);
}

}  // namespace hubsim
