#include "hubsim/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace hubsim {

namespace {

std::string format_rate(double rate) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", rate);
    return buf;
}

void write_series(const std::filesystem::path& path, const char* value_name,
                  const std::vector<std::string>& values) {
    std::ostringstream out;
    out << "# rank " << value_name << '\n';
    for (std::size_t i = 0; i < values.size(); ++i) out << i + 1 << ' ' << values[i] << '\n';
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << out.str())) throw Error("cannot write " + path.string());
}

}  // namespace

Report build_report(std::vector<MetricsRow> rows) {
    Report report;
    report.aggregates = summarize(rows);  // id order, matching the run's summary
    std::sort(rows.begin(), rows.end(), [](const MetricsRow& a, const MetricsRow& b) {
        if (a.utility != b.utility) return b.utility < a.utility;
        return a.truck_id < b.truck_id;
    });
    report.rows = std::move(rows);
    return report;
}

Report load_report(const std::string& log_dir) {
    const std::filesystem::path base(log_dir);
    std::vector<MetricsRow> rows = read_metrics_csv((base / "metrics.csv").string());
    const Summary summary = read_summary((base / "summary.json").string());
    if (summary.total_trucks != static_cast<int>(rows.size()))
        throw IncompleteLog(log_dir + ": summary counts " + std::to_string(summary.total_trucks) +
                            " trucks but the CSV has " + std::to_string(rows.size()) + " rows");

    const std::vector<Event> events = read_event_log((base / "events.log").string());
    std::set<TruckId> finished;
    for (const Event& ev : events)
        if (ev.kind == EventKind::Finish) finished.insert(ev.truck);
    for (const MetricsRow& row : rows)
        if (!finished.count(row.truck_id))
            throw IncompleteLog(log_dir + ": truck " + std::to_string(row.truck_id) +
                                " has no FINISH event");

    return build_report(std::move(rows));
}

void write_report_files(const Report& report, const std::string& out_dir) {
    const std::filesystem::path base(out_dir);
    std::filesystem::create_directories(base);

    std::vector<std::string> utilities, waits, rates, travels, platoons, solves;
    for (const MetricsRow& r : report.rows) {
        utilities.push_back(r.utility.str());
        waits.push_back(std::to_string(r.total_wait_min));
        rates.push_back(format_rate(r.platooning_rate));
        travels.push_back(std::to_string(r.travel_min));
        platoons.push_back(std::to_string(r.platoon_min));
        solves.push_back(std::to_string(r.mean_solve_ms));
    }
    write_series(base / "utilities.dat", "utility_sek", utilities);
    write_series(base / "waits.dat", "total_wait_min", waits);
    write_series(base / "rates.dat", "platooning_rate", rates);
    write_series(base / "travel_minutes.dat", "travel_min", travels);
    write_series(base / "platoon_minutes.dat", "platoon_min", platoons);
    write_series(base / "solve_ms.dat", "mean_solve_ms", solves);
    write_summary(report.aggregates, (base / "summary.json").string());
}

}  // namespace hubsim
