#include "hubsim/network.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

namespace hubsim {

const Hub& Network::hub(HubId id) const {
    auto it = hub_index_.find(id);
    if (it == hub_index_.end()) throw UnknownEndpoint("unknown hub id " + std::to_string(id));
    return hubs_[it->second];
}

std::optional<int> Network::segment_minutes(HubId from, HubId to) const {
    auto it = minutes_.find({from, to});
    if (it == minutes_.end()) return std::nullopt;
    return it->second;
}

const std::vector<std::pair<HubId, int>>& Network::outgoing(HubId from) const {
    auto it = out_.find(from);
    return it == out_.end() ? empty_ : it->second;
}

const std::vector<std::pair<HubId, int>>& Network::incoming(HubId to) const {
    auto it = in_.find(to);
    return it == in_.end() ? empty_ : it->second;
}

int Route::total_minutes() const {
    return std::accumulate(segment_minutes.begin(), segment_minutes.end(), 0);
}

Network build_network(const std::vector<Hub>& hubs, const std::vector<Segment>& segments) {
    Network net;
    if (hubs.empty()) throw UnknownEndpoint("network needs at least one hub");
    for (const Hub& h : hubs) {
        if (h.id < 1) throw UnknownEndpoint("hub ids must be >= 1, got " + std::to_string(h.id));
        if (!net.hub_index_.emplace(h.id, net.hubs_.size()).second)
            throw DuplicateHub("duplicate hub id " + std::to_string(h.id));
        net.hubs_.push_back(h);
    }
    for (const Segment& s : segments) {
        if (s.travel_minutes <= 0)
            throw NonPositiveTravelTime("segment " + std::to_string(s.from) + "->" +
                                        std::to_string(s.to) + " has travel_minutes " +
                                        std::to_string(s.travel_minutes));
        if (s.from == s.to)
            throw UnknownEndpoint("segment may not loop on hub " + std::to_string(s.from));
        if (!net.hub_index_.count(s.from) || !net.hub_index_.count(s.to))
            throw UnknownEndpoint("segment " + std::to_string(s.from) + "->" +
                                  std::to_string(s.to) + " references a hub not in the network");
        if (!net.minutes_.emplace(std::make_pair(s.from, s.to), s.travel_minutes).second)
            throw DuplicateSegment("more than one segment " + std::to_string(s.from) + "->" +
                                   std::to_string(s.to));
        net.segments_.push_back(s);
        net.out_[s.from].emplace_back(s.to, s.travel_minutes);
        net.in_[s.to].emplace_back(s.from, s.travel_minutes);
    }
    for (auto* adj : {&net.out_, &net.in_})
        for (auto& [id, v] : *adj) std::sort(v.begin(), v.end());
    return net;
}

Route make_route(const Network& net, TruckId truck, const std::vector<HubId>& hubs) {
    if (hubs.size() < 2) throw InvalidRoute("route needs at least two hubs");
    Route r;
    r.truck = truck;
    r.hubs = hubs;
    std::set<std::pair<HubId, HubId>> seen;
    for (std::size_t k = 0; k + 1 < hubs.size(); ++k) {
        auto minutes = net.segment_minutes(hubs[k], hubs[k + 1]);
        if (!minutes)
            throw InvalidRoute("route uses missing segment " + std::to_string(hubs[k]) + "->" +
                               std::to_string(hubs[k + 1]));
        if (!seen.emplace(hubs[k], hubs[k + 1]).second)
            throw InvalidRoute("route repeats segment " + std::to_string(hubs[k]) + "->" +
                               std::to_string(hubs[k + 1]));
        r.segment_minutes.push_back(*minutes);
    }
    return r;
}

Route plan_route(const Network& net, HubId origin, HubId destination, TruckId truck) {
    if (origin == destination)
        throw InvalidRoute("origin and destination must differ (hub " + std::to_string(origin) + ")");
    net.hub(origin);
    net.hub(destination);

    // Distance-to-destination over the reversed graph, then a greedy forward
    // walk that keeps only shortest-path successors and picks the smallest hub
    // id at every step. That walk is the lexicographically smallest sequence
    // among all minimum-cost routes.
    constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
    std::unordered_map<HubId, long long> dist;
    for (const Hub& h : net.hubs()) dist[h.id] = kInf;
    dist[destination] = 0;
    using QE = std::pair<long long, HubId>;
    std::priority_queue<QE, std::vector<QE>, std::greater<>> q;
    q.push({0, destination});
    while (!q.empty()) {
        auto [d, v] = q.top();
        q.pop();
        if (d != dist[v]) continue;
        for (auto [u, w] : net.incoming(v)) {
            if (d + w < dist[u]) {
                dist[u] = d + w;
                q.push({dist[u], u});
            }
        }
    }
    if (dist[origin] >= kInf)
        throw Unreachable("no route from hub " + std::to_string(origin) + " to hub " +
                          std::to_string(destination));

    std::vector<HubId> hubs{origin};
    HubId at = origin;
    while (at != destination) {
        HubId next = 0;
        for (auto [u, w] : net.outgoing(at)) {  // sorted by id, first hit wins
            if (dist[u] != kInf && w + dist[u] == dist[at]) {
                next = u;
                break;
            }
        }
        hubs.push_back(next);
        at = next;
    }
    return make_route(net, truck, hubs);
}

bool is_common_segment(const Route& route_i, int k, const Route& route_j) {
    if (k < 0 || k > route_i.length() - 2)
        throw IndexOutOfRange("hub index " + std::to_string(k) + " out of range for route of " +
                              std::to_string(route_i.length()) + " hubs");
    const HubId a = route_i.hubs[k];
    const HubId b = route_i.hubs[k + 1];
    for (int m = 0; m + 1 < route_j.length(); ++m)
        if (route_j.hubs[m] == a && route_j.hubs[m + 1] == b) return true;
    return false;
}

const std::vector<TruckId>& PartnerIndex::partners(TruckId truck, int k) const {
    auto it = by_truck_.find(truck);
    if (it == by_truck_.end()) return empty_;
    if (k < 0 || k >= static_cast<int>(it->second.size()))
        throw IndexOutOfRange("hub index " + std::to_string(k) + " out of range for truck " +
                              std::to_string(truck));
    return it->second[k];
}

int PartnerIndex::horizon(TruckId truck) const {
    auto it = by_truck_.find(truck);
    return it == by_truck_.end() ? 0 : static_cast<int>(it->second.size());
}

PartnerIndex build_partner_index(const std::vector<Route>& routes) {
    // Group trucks by directed physical pair, then read each truck's sets off
    // the groups. Symmetry holds because membership is segment equality.
    std::map<std::pair<HubId, HubId>, std::vector<TruckId>> users;
    for (const Route& r : routes)
        for (int k = 0; k + 1 < r.length(); ++k)
            users[{r.hubs[k], r.hubs[k + 1]}].push_back(r.truck);

    PartnerIndex idx;
    for (const Route& r : routes) {
        auto& sets = idx.by_truck_[r.truck];
        sets.resize(r.length() - 1);
        for (int k = 0; k + 1 < r.length(); ++k) {
            const auto& group = users[{r.hubs[k], r.hubs[k + 1]}];
            for (TruckId j : group)
                if (j != r.truck) sets[k].push_back(j);
            std::sort(sets[k].begin(), sets[k].end());
            sets[k].erase(std::unique(sets[k].begin(), sets[k].end()), sets[k].end());
        }
    }
    return idx;
}

}  // namespace hubsim
