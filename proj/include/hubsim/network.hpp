#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hubsim/errors.hpp"

namespace hubsim {

using HubId = std::int32_t;    // physical hub id, >= 1
using TruckId = std::int32_t;  // truck id, >= 1

/// A physical hub. Coordinates are only used for scenario generation.
struct Hub {
    HubId id = 0;
    std::string name;
    std::optional<double> lat;
    std::optional<double> lon;
};

/// Directed hub-to-hub edge with a fixed travel time in whole minutes.
struct Segment {
    HubId from = 0;
    HubId to = 0;
    int travel_minutes = 0;
};

/// Immutable directed hub graph. At most one segment per ordered hub pair.
class Network {
public:
    const std::vector<Hub>& hubs() const { return hubs_; }
    const std::vector<Segment>& segments() const { return segments_; }

    bool has_hub(HubId id) const { return hub_index_.count(id) != 0; }
    const Hub& hub(HubId id) const;

    /// Travel minutes of the segment from -> to, or nullopt if absent.
    std::optional<int> segment_minutes(HubId from, HubId to) const;

    /// Outgoing (to, minutes) pairs, sorted by destination id.
    const std::vector<std::pair<HubId, int>>& outgoing(HubId from) const;
    const std::vector<std::pair<HubId, int>>& incoming(HubId to) const;

private:
    friend Network build_network(const std::vector<Hub>&, const std::vector<Segment>&);

    std::vector<Hub> hubs_;
    std::vector<Segment> segments_;
    std::unordered_map<HubId, std::size_t> hub_index_;
    std::map<std::pair<HubId, HubId>, int> minutes_;
    std::unordered_map<HubId, std::vector<std::pair<HubId, int>>> out_;
    std::unordered_map<HubId, std::vector<std::pair<HubId, int>>> in_;
    std::vector<std::pair<HubId, int>> empty_;
};

/// A truck's fixed route: at least two hubs, each consecutive pair backed by a
/// network segment. Hubs may be revisited but no ordered pair may repeat.
struct Route {
    TruckId truck = 0;
    std::vector<HubId> hubs;
    std::vector<int> segment_minutes;

    /// Number of hubs on the route.
    int length() const { return static_cast<int>(hubs.size()); }
    /// Index of the last hub (the destination).
    int last_index() const { return length() - 1; }
    int total_minutes() const;
};

/// Offline index of potential platoon partners: for truck i and hub index k,
/// every other truck whose route contains i's k-th directed segment.
class PartnerIndex {
public:
    /// Partner ids for (truck, hub index k), ascending. Empty if unknown.
    const std::vector<TruckId>& partners(TruckId truck, int k) const;

    /// Hub-index count registered for a truck (route length - 1).
    int horizon(TruckId truck) const;

private:
    friend PartnerIndex build_partner_index(const std::vector<Route>&);
    std::unordered_map<TruckId, std::vector<std::vector<TruckId>>> by_truck_;
    std::vector<TruckId> empty_;
};

/// Validates and assembles a Network.
/// Throws DuplicateHub, DuplicateSegment, UnknownEndpoint, NonPositiveTravelTime.
Network build_network(const std::vector<Hub>& hubs, const std::vector<Segment>& segments);

/// Cheapest route by total travel minutes; equal-cost ties go to the
/// lexicographically smallest hub-id sequence. Throws Unreachable.
Route plan_route(const Network& net, HubId origin, HubId destination, TruckId truck);

/// Validates a hub sequence against the network and builds a Route.
/// Throws InvalidRoute / UnknownEndpoint on violations.
Route make_route(const Network& net, TruckId truck, const std::vector<HubId>& hubs);

/// True iff route_i's k-th directed segment appears consecutively in route_j.
/// Throws IndexOutOfRange unless 0 <= k <= N_i - 2.
bool is_common_segment(const Route& route_i, int k, const Route& route_j);

/// Builds the partner index for a fleet of routes (symmetric by construction).
PartnerIndex build_partner_index(const std::vector<Route>& routes);

}  // namespace hubsim
