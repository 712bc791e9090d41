#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "doctest.h"
#include "hubsim/io.hpp"
#include "hubsim/scenario.hpp"
#include "support.hpp"

using namespace hubsim;
namespace fs = std::filesystem;
using hubsim::testing::basic_truck;
using hubsim::testing::line_network;
using hubsim::testing::pair_scenario;

namespace {

// Fresh directory under the system temp root, removed on destruction.
struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("hubsim-io-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("networks survive a save/load round trip") {
    TempDir dir;
    const Network net = build_network(
        {{1, "Alpha", 57.7, 11.97}, {2, "Beta", {}, {}}, {3, "Gamma", 59.33, 18.06}},
        {{1, 2, 45}, {2, 3, 60}, {3, 1, 120}});
    save_network(net, dir.file("net.json"));
    const Network back = load_network(dir.file("net.json"));

    REQUIRE(back.hubs().size() == 3);
    CHECK(back.hub(1).name == "Alpha");
    CHECK(back.hub(1).lat == 57.7);
    CHECK(back.hub(1).lon == 11.97);
    CHECK_FALSE(back.hub(2).lat.has_value());
    REQUIRE(back.segments().size() == 3);
    CHECK(back.segment_minutes(1, 2) == 45);
    CHECK(back.segment_minutes(3, 1) == 120);
}

TEST_CASE("network loading reports the offending file") {
    TempDir dir;
    CHECK_THROWS_AS(load_network(dir.file("absent.json")), ScenarioInvalid);

    std::ofstream(dir.file("garbage.json")) << "not json";
    CHECK_THROWS_AS(load_network(dir.file("garbage.json")), ScenarioInvalid);

    std::ofstream(dir.file("no-hubs.json")) << "{\"segments\": []}";
    CHECK_THROWS_AS(load_network(dir.file("no-hubs.json")), ScenarioInvalid);

    // structurally valid json with a semantically broken graph
    std::ofstream(dir.file("dangling.json"))
        << R"({"hubs": [{"id": 1, "name": "A"}],
              "segments": [{"from": 1, "to": 2, "travel_minutes": 10}]})";
    CHECK_THROWS_AS(load_network(dir.file("dangling.json")), UnknownEndpoint);
}

TEST_CASE("truck records survive a save/load round trip") {
    TempDir dir;
    const Network net = line_network({60, 60});
    TruckSpec one = basic_truck(1, net, {1, 2, 3});
    one.start_tick = 480;
    one.deadline_tick = 480 + 120 + 60;
    TruckSpec two = basic_truck(2, net, {1, 2});
    two.wait_min = 5;
    two.wait_budget_total = 20;
    two.deadline_tick = 60 + 20;
    two.xi_per_min = Money::from_sek(1.23);
    two.eps_per_min = Money::from_sek(0.45);

    save_trucks({one, two}, dir.file("trucks.json"));
    const std::vector<TruckSpec> back = load_trucks(dir.file("trucks.json"), net);

    REQUIRE(back.size() == 2);
    CHECK(back[0].id == 1);
    CHECK(back[0].route.hubs == std::vector<HubId>{1, 2, 3});
    CHECK(back[0].start_tick == 480);
    CHECK(back[0].deadline_tick == 660);
    CHECK(back[0].wait_min == 0);
    CHECK(back[0].wait_max_per_hub == 30);
    CHECK(back[0].wait_budget_total == 60);
    CHECK(back[0].xi_per_min == Money::from_cents(96));
    CHECK(back[1].wait_min == 5);
    CHECK(back[1].xi_per_min == Money::from_cents(123));
    CHECK(back[1].eps_per_min == Money::from_cents(45));
}

TEST_CASE("truck loading validates every record") {
    TempDir dir;
    const Network net = line_network({60, 60});

    // wait_min is optional and defaults to zero
    std::ofstream(dir.file("minimal.json")) << R"([{
        "id": 1, "origin": 1, "destination": 3,
        "start_tick": 0, "deadline_tick": 300,
        "wait_max_per_hub": 30, "wait_budget_total": 60,
        "xi_per_min": 0.96, "eps_per_min": 0.75}])";
    const auto minimal = load_trucks(dir.file("minimal.json"), net);
    REQUIRE(minimal.size() == 1);
    CHECK(minimal[0].wait_min == 0);
    CHECK(minimal[0].route.hubs == std::vector<HubId>{1, 2, 3});

    std::ofstream(dir.file("late.json")) << R"([{
        "id": 1, "origin": 1, "destination": 3,
        "start_tick": 0, "deadline_tick": 100,
        "wait_max_per_hub": 30, "wait_budget_total": 60,
        "xi_per_min": 0.96, "eps_per_min": 0.75}])";
    CHECK_THROWS_AS(load_trucks(dir.file("late.json"), net), ScenarioInvalid);

    std::ofstream(dir.file("missing-field.json")) << R"([{
        "id": 1, "origin": 1, "destination": 3}])";
    CHECK_THROWS_AS(load_trucks(dir.file("missing-field.json"), net), ScenarioInvalid);

    std::ofstream(dir.file("unreachable.json")) << R"([{
        "id": 1, "origin": 3, "destination": 1,
        "start_tick": 0, "deadline_tick": 300,
        "wait_max_per_hub": 30, "wait_budget_total": 60,
        "xi_per_min": 0.96, "eps_per_min": 0.75}])";
    CHECK_THROWS_AS(load_trucks(dir.file("unreachable.json"), net), Unreachable);
}

TEST_CASE("scenario directories round-trip with their seed") {
    TempDir dir;
    Scenario s = pair_scenario();
    s.seed = 987654321;
    save_scenario(s, dir.file("scn"));
    const Scenario back = load_scenario(dir.file("scn"));

    CHECK(back.seed == 987654321);
    REQUIRE(back.trucks.size() == 2);
    CHECK(back.trucks[0].id == 1);
    CHECK(back.trucks[1].wait_min == 10);
    CHECK(back.network.segment_minutes(1, 2) == 60);

    // the round-tripped scenario simulates identically
    const SimulationLog log = run(back);
    CHECK(realized_utility(1, log) == Money::from_cents(4260));

    CHECK_THROWS_AS(load_scenario(dir.file("nowhere")), ScenarioInvalid);
}

TEST_CASE("event logs round-trip line by line") {
    TempDir dir;
    const SimulationLog log = run(pair_scenario());
    write_event_log(log.events, dir.file("events.log"));
    const std::vector<Event> back = read_event_log(dir.file("events.log"));

    REQUIRE(back.size() == log.events.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].tick == log.events[i].tick);
        CHECK(back[i].kind == log.events[i].kind);
        CHECK(back[i].truck == log.events[i].truck);
        CHECK(back[i].hub == log.events[i].hub);
        CHECK(back[i].next_hub == log.events[i].next_hub);
        CHECK(back[i].members == log.events[i].members);
        if (back[i].kind == EventKind::Decide) {
            CHECK(back[i].predicted_utility == log.events[i].predicted_utility);
            // whole milliseconds only
            CHECK(back[i].solve_ms == static_cast<double>(static_cast<std::int64_t>(
                                          log.events[i].solve_ms)));
        }
    }

    const std::string text = slurp(dir.file("events.log"));
    CHECK(text.find("0 ARRIVE truck=1 hub=1") != std::string::npos);
    CHECK(text.find("utility_cents=4260") != std::string::npos);
    CHECK(text.find("10 PLATOON_FORM hub=1 next=2 trucks=1,2") != std::string::npos);
    CHECK(text.find("140 FINISH truck=2 hub=3") != std::string::npos);
}

TEST_CASE("event log reading rejects damaged files") {
    TempDir dir;
    CHECK_THROWS_AS(read_event_log(dir.file("absent.log")), IncompleteLog);

    std::ofstream(dir.file("bad-kind.log")) << "0 WANDER truck=1 hub=1\n";
    CHECK_THROWS_AS(read_event_log(dir.file("bad-kind.log")), IncompleteLog);

    std::ofstream(dir.file("bad-field.log")) << "0 ARRIVE truck=x hub=1\n";
    CHECK_THROWS_AS(read_event_log(dir.file("bad-field.log")), IncompleteLog);

    std::ofstream(dir.file("truncated.log")) << "0 ARRIVE truck=1\n";
    CHECK_THROWS_AS(read_event_log(dir.file("truncated.log")), IncompleteLog);
}

TEST_CASE("metrics rows capture each finished truck in id order") {
    const SimulationLog log = run(pair_scenario());
    const std::vector<MetricsRow> rows = metrics_rows(log);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].truck_id == 1);
    CHECK(rows[0].utility == Money::from_cents(4260));
    CHECK(rows[0].total_wait_min == 20);
    CHECK(rows[0].travel_min == 120);
    CHECK(rows[0].platoon_min == 120);
    CHECK(rows[0].platooning_rate == 1.0);
    CHECK(rows[1].truck_id == 2);

    SimulationLog unfinished = run(pair_scenario());
    unfinished.outcomes[9] = TruckOutcome{};
    CHECK_THROWS_AS(metrics_rows(unfinished), TruckNotFinished);
}

TEST_CASE("the metrics csv round-trips exactly") {
    TempDir dir;
    std::vector<MetricsRow> rows;
    rows.push_back({1, Money::from_cents(4260), 20, 120, 120, 1.0, 0});
    rows.push_back({2, Money::from_cents(-105), 0, 95, 0, 0.0, 3});
    rows.push_back({3, Money::from_cents(0), 7, 240, 60, 0.25, 12});
    write_metrics_csv(rows, dir.file("metrics.csv"));

    const std::string text = slurp(dir.file("metrics.csv"));
    CHECK(text.find("truck_id,utility_sek,total_wait_min,travel_min,platoon_min,"
                    "platooning_rate,mean_solve_ms") == 0);
    CHECK(text.find("1,42.60,20,120,120,1.000000,0") != std::string::npos);
    CHECK(text.find("2,-1.05,0,95,0,0.000000,3") != std::string::npos);

    const std::vector<MetricsRow> back = read_metrics_csv(dir.file("metrics.csv"));
    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].truck_id == rows[i].truck_id);
        CHECK(back[i].utility == rows[i].utility);
        CHECK(back[i].total_wait_min == rows[i].total_wait_min);
        CHECK(back[i].travel_min == rows[i].travel_min);
        CHECK(back[i].platoon_min == rows[i].platoon_min);
        CHECK(back[i].platooning_rate == rows[i].platooning_rate);
        CHECK(back[i].mean_solve_ms == rows[i].mean_solve_ms);
    }
}

TEST_CASE("csv reading rejects the wrong header or shape") {
    TempDir dir;
    CHECK_THROWS_AS(read_metrics_csv(dir.file("absent.csv")), IncompleteLog);

    std::ofstream(dir.file("bad-header.csv"))
        << "truck,utility\n1,42.60\n";
    CHECK_THROWS_AS(read_metrics_csv(dir.file("bad-header.csv")), IncompleteLog);

    std::ofstream(dir.file("short-row.csv"))
        << "truck_id,utility_sek,total_wait_min,travel_min,platoon_min,"
           "platooning_rate,mean_solve_ms\n1,42.60,20\n";
    CHECK_THROWS_AS(read_metrics_csv(dir.file("short-row.csv")), IncompleteLog);

    std::ofstream(dir.file("bad-money.csv"))
        << "truck_id,utility_sek,total_wait_min,travel_min,platoon_min,"
           "platooning_rate,mean_solve_ms\n1,42.6.0,20,120,120,1.000000,0\n";
    CHECK_THROWS_AS(read_metrics_csv(dir.file("bad-money.csv")), IncompleteLog);
}

TEST_CASE("summaries aggregate the rows and round-trip as json") {
    TempDir dir;
    std::vector<MetricsRow> rows;
    rows.push_back({1, Money::from_cents(4260), 20, 120, 120, 1.0, 2});
    rows.push_back({2, Money::from_cents(0), 0, 120, 0, 0.0, 1});
    rows.push_back({3, Money::from_cents(-75), 10, 60, 30, 0.5, 0});

    const Summary s = summarize(rows);
    CHECK(s.total_trucks == 3);
    CHECK(s.mean_wait_min == 10.0);
    CHECK(s.mean_platooning_rate == 0.5);
    CHECK(s.frac_nonzero_utility == 0.666667);  // rounded to six decimals
    CHECK(s.mean_solve_ms == 1.0);

    write_summary(s, dir.file("summary.json"));
    const Summary back = read_summary(dir.file("summary.json"));
    CHECK(back.mean_wait_min == s.mean_wait_min);
    CHECK(back.mean_platooning_rate == s.mean_platooning_rate);
    CHECK(back.frac_nonzero_utility == s.frac_nonzero_utility);
    CHECK(back.mean_solve_ms == s.mean_solve_ms);
    CHECK(back.total_trucks == 3);

    const std::string text = slurp(dir.file("summary.json"));
    for (const char* key : {"mean_wait_min", "mean_platooning_rate", "frac_nonzero_utility",
                            "mean_solve_ms", "total_trucks"})
        CHECK(text.find(key) != std::string::npos);

    const Summary empty = summarize({});
    CHECK(empty.total_trucks == 0);
    CHECK(empty.mean_wait_min == 0.0);

    CHECK_THROWS_AS(read_summary(dir.file("absent.json")), IncompleteLog);
}

TEST_CASE("aggregates recomputed from the csv match the summary exactly") {
    const Network net = synthetic_network(12, 3);
    ScenarioConfig config;
    config.trucks = 15;
    config.seed = 11;
    const Scenario s = generate_scenario(net, config);
    const SimulationLog log = run(s);
    const auto rows = metrics_rows(log);
    const Summary direct = summarize(rows);

    TempDir dir;
    write_metrics_csv(rows, dir.file("metrics.csv"));
    const Summary reread = summarize(read_metrics_csv(dir.file("metrics.csv")));
    CHECK(direct.mean_wait_min == reread.mean_wait_min);
    CHECK(direct.mean_platooning_rate == reread.mean_platooning_rate);
    CHECK(direct.frac_nonzero_utility == reread.frac_nonzero_utility);
    CHECK(direct.mean_solve_ms == reread.mean_solve_ms);
    CHECK(direct.total_trucks == reread.total_trucks);
}

TEST_CASE("round6 snaps to the nearest millionth") {
    CHECK(round6(0.0) == 0.0);
    CHECK(round6(0.1234564) == 0.123456);
    CHECK(round6(0.1234567) == 0.123457);
    CHECK(round6(1.0) == 1.0);
    CHECK(round6(-0.1234567) == -0.123457);
    CHECK(round6(2.0 / 3.0) == 0.666667);
}
