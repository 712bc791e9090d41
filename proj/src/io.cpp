#include "hubsim/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace hubsim {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioInvalid("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ScenarioInvalid(path + ": " + e.what());
    }
}

const json& field(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) throw ScenarioInvalid(path + ": missing field '" + key + "'");
    return *it;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
    if (!out) throw Error("cannot write " + path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string format_rate(double rate) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", rate);
    return buf;
}

Money money_from_string(const std::string& text, const std::string& where) {
    std::size_t pos = 0;
    const bool negative = !text.empty() && text[0] == '-';
    if (negative) pos = 1;
    const std::size_t dot = text.find('.', pos);
    if (dot == std::string::npos || dot == pos || dot + 3 != text.size())
        throw IncompleteLog(where + ": malformed amount '" + text + "'");
    for (std::size_t i = pos; i < text.size(); ++i)
        if (i != dot && !std::isdigit(static_cast<unsigned char>(text[i])))
            throw IncompleteLog(where + ": malformed amount '" + text + "'");
    const std::int64_t units = std::stoll(text.substr(pos, dot - pos));
    const std::int64_t hundredths = std::stoll(text.substr(dot + 1));
    const std::int64_t cents = units * 100 + hundredths;
    return Money::from_cents(negative ? -cents : cents);
}

}  // namespace

double round6(double x) {
    return std::llround(x * 1e6) / 1e6;
}

// ---- network ----------------------------------------------------------------

Network load_network(const std::string& path) {
    const json j = parse_file(path);
    std::vector<Hub> hubs;
    for (const json& h : field(j, "hubs", path)) {
        Hub hub;
        hub.id = field(h, "id", path).get<HubId>();
        hub.name = field(h, "name", path).get<std::string>();
        if (h.contains("lat")) hub.lat = h["lat"].get<double>();
        if (h.contains("lon")) hub.lon = h["lon"].get<double>();
        hubs.push_back(std::move(hub));
    }
    std::vector<Segment> segments;
    for (const json& s : field(j, "segments", path)) {
        Segment seg;
        seg.from = field(s, "from", path).get<HubId>();
        seg.to = field(s, "to", path).get<HubId>();
        seg.travel_minutes = field(s, "travel_minutes", path).get<int>();
        segments.push_back(seg);
    }
    return build_network(hubs, segments);
}

void save_network(const Network& net, const std::string& path) {
    json hubs = json::array();
    for (const Hub& h : net.hubs()) {
        json j{{"id", h.id}, {"name", h.name}};
        if (h.lat) j["lat"] = *h.lat;
        if (h.lon) j["lon"] = *h.lon;
        hubs.push_back(std::move(j));
    }
    json segments = json::array();
    for (const Segment& s : net.segments())
        segments.push_back({{"from", s.from}, {"to", s.to}, {"travel_minutes", s.travel_minutes}});
    write_file(path, dump(json{{"hubs", std::move(hubs)}, {"segments", std::move(segments)}}));
}

// ---- trucks -----------------------------------------------------------------

std::vector<TruckSpec> load_trucks(const std::string& path, const Network& net) {
    const json j = parse_file(path);
    if (!j.is_array()) throw ScenarioInvalid(path + ": expected an array of truck records");
    std::vector<TruckSpec> trucks;
    for (const json& t : j) {
        TruckSpec spec;
        spec.id = field(t, "id", path).get<TruckId>();
        const HubId origin = field(t, "origin", path).get<HubId>();
        const HubId destination = field(t, "destination", path).get<HubId>();
        spec.route = plan_route(net, origin, destination, spec.id);
        spec.start_tick = field(t, "start_tick", path).get<Tick>();
        spec.deadline_tick = field(t, "deadline_tick", path).get<Tick>();
        spec.wait_min = t.contains("wait_min") ? t["wait_min"].get<int>() : 0;
        spec.wait_max_per_hub = field(t, "wait_max_per_hub", path).get<int>();
        spec.wait_budget_total = field(t, "wait_budget_total", path).get<int>();
        spec.xi_per_min = Money::from_sek(field(t, "xi_per_min", path).get<double>());
        spec.eps_per_min = Money::from_sek(field(t, "eps_per_min", path).get<double>());
        spec.validate();
        trucks.push_back(std::move(spec));
    }
    return trucks;
}

void save_trucks(const std::vector<TruckSpec>& trucks, const std::string& path) {
    json j = json::array();
    for (const TruckSpec& t : trucks) {
        j.push_back({{"id", t.id},
                     {"origin", t.route.hubs.front()},
                     {"destination", t.route.hubs.back()},
                     {"start_tick", t.start_tick},
                     {"deadline_tick", t.deadline_tick},
                     {"wait_min", t.wait_min},
                     {"wait_max_per_hub", t.wait_max_per_hub},
                     {"wait_budget_total", t.wait_budget_total},
                     {"xi_per_min", t.xi_per_min.cents / 100.0},
                     {"eps_per_min", t.eps_per_min.cents / 100.0}});
    }
    write_file(path, dump(j));
}

// ---- scenario directory -----------------------------------------------------

Scenario load_scenario(const std::string& dir) {
    const std::filesystem::path base(dir);
    Scenario scenario;
    scenario.network = load_network((base / "network.json").string());
    scenario.trucks = load_trucks((base / "trucks.json").string(), scenario.network);
    const auto meta_path = base / "scenario.json";
    if (std::filesystem::exists(meta_path)) {
        const json meta = parse_file(meta_path.string());
        if (meta.contains("seed")) scenario.seed = meta["seed"].get<std::uint64_t>();
    }
    return scenario;
}

void save_scenario(const Scenario& scenario, const std::string& dir) {
    const std::filesystem::path base(dir);
    std::filesystem::create_directories(base);
    save_network(scenario.network, (base / "network.json").string());
    save_trucks(scenario.trucks, (base / "trucks.json").string());
    write_file((base / "scenario.json").string(),
               dump(json{{"seed", scenario.seed},
                         {"trucks", scenario.trucks.size()},
                         {"network", "network.json"},
                         {"trucks_file", "trucks.json"}}));
}

// ---- event log ----------------------------------------------------------------

void write_event_log(const std::vector<Event>& events, const std::string& path) {
    std::ostringstream out;
    for (const Event& ev : events) {
        out << ev.tick << ' ';
        switch (ev.kind) {
            case EventKind::Arrive:
                out << "ARRIVE truck=" << ev.truck << " hub=" << ev.hub;
                break;
            case EventKind::Decide:
                out << "DECIDE truck=" << ev.truck << " hub=" << ev.hub
                    << " solve_ms=" << static_cast<std::int64_t>(ev.solve_ms)
                    << " utility_cents=" << ev.predicted_utility.cents;
                break;
            case EventKind::Depart:
                out << "DEPART truck=" << ev.truck << " hub=" << ev.hub
                    << " next=" << ev.next_hub;
                break;
            case EventKind::PlatoonForm: {
                out << "PLATOON_FORM hub=" << ev.hub << " next=" << ev.next_hub << " trucks=";
                for (std::size_t i = 0; i < ev.members.size(); ++i) {
                    if (i) out << ',';
                    out << ev.members[i];
                }
                break;
            }
            case EventKind::Finish:
                out << "FINISH truck=" << ev.truck << " hub=" << ev.hub;
                break;
        }
        out << '\n';
    }
    write_file(path, out.str());
}

std::vector<Event> read_event_log(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IncompleteLog("cannot open " + path);
    std::vector<Event> events;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const std::string where = path + ":" + std::to_string(lineno);
        std::istringstream ls(line);
        Event ev;
        std::string kind;
        if (!(ls >> ev.tick >> kind)) throw IncompleteLog(where + ": malformed event");

        std::map<std::string, std::string> kv;
        std::string token;
        while (ls >> token) {
            const auto eq = token.find('=');
            if (eq == std::string::npos)
                throw IncompleteLog(where + ": malformed token '" + token + "'");
            kv[token.substr(0, eq)] = token.substr(eq + 1);
        }
        auto number = [&](const std::string& text) -> std::int64_t {
            std::int64_t v = 0;
            const char* first = text.data();
            const char* last = first + text.size();
            const auto [p, ec] = std::from_chars(first, last, v);
            if (ec != std::errc() || p != last)
                throw IncompleteLog(where + ": malformed number '" + text + "'");
            return v;
        };
        auto want = [&](const char* key) -> std::int64_t {
            auto it = kv.find(key);
            if (it == kv.end())
                throw IncompleteLog(where + ": missing field '" + std::string(key) + "'");
            return number(it->second);
        };

        if (kind == "ARRIVE" || kind == "FINISH") {
            ev.kind = kind == "ARRIVE" ? EventKind::Arrive : EventKind::Finish;
            ev.truck = static_cast<TruckId>(want("truck"));
            ev.hub = static_cast<HubId>(want("hub"));
        } else if (kind == "DECIDE") {
            ev.kind = EventKind::Decide;
            ev.truck = static_cast<TruckId>(want("truck"));
            ev.hub = static_cast<HubId>(want("hub"));
            ev.solve_ms = static_cast<double>(want("solve_ms"));
            ev.predicted_utility = Money::from_cents(want("utility_cents"));
        } else if (kind == "DEPART") {
            ev.kind = EventKind::Depart;
            ev.truck = static_cast<TruckId>(want("truck"));
            ev.hub = static_cast<HubId>(want("hub"));
            ev.next_hub = static_cast<HubId>(want("next"));
        } else if (kind == "PLATOON_FORM") {
            ev.kind = EventKind::PlatoonForm;
            ev.hub = static_cast<HubId>(want("hub"));
            ev.next_hub = static_cast<HubId>(want("next"));
            auto it = kv.find("trucks");
            if (it == kv.end()) throw IncompleteLog(where + ": missing field 'trucks'");
            std::istringstream ms(it->second);
            std::string id;
            while (std::getline(ms, id, ',')) ev.members.push_back(static_cast<TruckId>(number(id)));
            if (ev.members.size() < 2) throw IncompleteLog(where + ": platoon of fewer than 2");
        } else {
            throw IncompleteLog(where + ": unknown event kind '" + kind + "'");
        }
        events.push_back(std::move(ev));
    }
    return events;
}

// ---- per-truck metrics --------------------------------------------------------

std::vector<MetricsRow> metrics_rows(const SimulationLog& log) {
    std::vector<MetricsRow> rows;
    for (const auto& [id, out] : log.outcomes) {
        if (!out.finished)
            throw TruckNotFinished("truck " + std::to_string(id) +
                                   " has not completed its route");
        MetricsRow row;
        row.truck_id = id;
        row.utility = out.realized_utility;
        row.total_wait_min = out.total_wait;
        row.travel_min = out.travel_minutes;
        row.platoon_min = out.platoon_minutes;
        row.platooning_rate = round6(platooning_rate(id, log));
        std::int64_t floored = 0;
        for (double ms : out.solve_ms) floored += static_cast<std::int64_t>(ms);
        row.mean_solve_ms =
            out.solve_ms.empty() ? 0 : floored / static_cast<std::int64_t>(out.solve_ms.size());
        rows.push_back(row);
    }
    return rows;
}

void write_metrics_csv(const std::vector<MetricsRow>& rows, const std::string& path) {
    std::ostringstream out;
    out << "truck_id,utility_sek,total_wait_min,travel_min,platoon_min,platooning_rate,"
           "mean_solve_ms\n";
    for (const MetricsRow& r : rows) {
        out << r.truck_id << ',' << r.utility.str() << ',' << r.total_wait_min << ','
            << r.travel_min << ',' << r.platoon_min << ',' << format_rate(r.platooning_rate)
            << ',' << r.mean_solve_ms << '\n';
    }
    write_file(path, out.str());
}

std::vector<MetricsRow> read_metrics_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IncompleteLog("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) ||
        line !=
            "truck_id,utility_sek,total_wait_min,travel_min,platoon_min,platooning_rate,"
            "mean_solve_ms")
        throw IncompleteLog(path + ": unexpected header");

    std::vector<MetricsRow> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const std::string where = path + ":" + std::to_string(lineno);
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != 7) throw IncompleteLog(where + ": expected 7 columns");
        MetricsRow row;
        try {
            row.truck_id = std::stoi(cells[0]);
            row.utility = money_from_string(cells[1], where);
            row.total_wait_min = std::stoi(cells[2]);
            row.travel_min = std::stoi(cells[3]);
            row.platoon_min = std::stoi(cells[4]);
            row.platooning_rate = std::stod(cells[5]);
            row.mean_solve_ms = std::stoll(cells[6]);
        } catch (const std::logic_error&) {
            throw IncompleteLog(where + ": malformed row");
        }
        rows.push_back(row);
    }
    return rows;
}

// ---- summary ------------------------------------------------------------------

Summary summarize(const std::vector<MetricsRow>& rows) {
    Summary s;
    s.total_trucks = static_cast<int>(rows.size());
    if (rows.empty()) return s;
    double wait = 0.0, rate = 0.0, solve = 0.0;
    int nonzero = 0;
    for (const MetricsRow& r : rows) {
        wait += r.total_wait_min;
        rate += r.platooning_rate;
        solve += static_cast<double>(r.mean_solve_ms);
        if (r.utility.cents != 0) ++nonzero;
    }
    const double n = static_cast<double>(rows.size());
    s.mean_wait_min = round6(wait / n);
    s.mean_platooning_rate = round6(rate / n);
    s.frac_nonzero_utility = round6(nonzero / n);
    s.mean_solve_ms = round6(solve / n);
    return s;
}

void write_summary(const Summary& summary, const std::string& path) {
    write_file(path, dump(json{{"mean_wait_min", summary.mean_wait_min},
                               {"mean_platooning_rate", summary.mean_platooning_rate},
                               {"frac_nonzero_utility", summary.frac_nonzero_utility},
                               {"mean_solve_ms", summary.mean_solve_ms},
                               {"total_trucks", summary.total_trucks}}));
}

Summary read_summary(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IncompleteLog("cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw IncompleteLog(path + ": " + e.what());
    }
    Summary s;
    try {
        s.mean_wait_min = j.at("mean_wait_min").get<double>();
        s.mean_platooning_rate = j.at("mean_platooning_rate").get<double>();
        s.frac_nonzero_utility = j.at("frac_nonzero_utility").get<double>();
        s.mean_solve_ms = j.at("mean_solve_ms").get<double>();
        s.total_trucks = j.at("total_trucks").get<int>();
    } catch (const json::exception& e) {
        throw IncompleteLog(path + ": " + e.what());
    }
    return s;
}

}  // namespace hubsim
