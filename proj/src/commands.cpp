#include "hubsim/commands.hpp"

#include <filesystem>
#include <functional>
#include <iostream>

#include "hubsim/io.hpp"
#include "hubsim/report.hpp"

namespace hubsim {

namespace {

int guarded(const char* what, const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const Error& e) {
        std::cerr << what << ": " << e.what() << '\n';
        return 1;
    }
}

}  // namespace

int cmd_generate(const GenerateArgs& args) {
    return guarded("generate", [&] {
        const Network net = load_network(args.config.network_file);
        const Scenario scenario = generate_scenario(net, args.config);
        save_scenario(scenario, args.out_dir);
        std::cout << "wrote scenario with " << scenario.trucks.size() << " trucks to "
                  << args.out_dir << '\n';
    });
}

int cmd_run(const RunArgs& args) {
    return guarded("run", [&] {
        const Scenario scenario = load_scenario(args.scenario_dir);
        const SimulationLog log = run(scenario);
        const std::vector<MetricsRow> rows = metrics_rows(log);
        const Summary summary = summarize(rows);

        const std::filesystem::path out(args.out_dir);
        std::filesystem::create_directories(out);
        write_event_log(log.events, (out / "events.log").string());
        write_metrics_csv(rows, (out / "metrics.csv").string());
        write_summary(summary, (out / "summary.json").string());

        std::cout << "simulated " << summary.total_trucks << " trucks: mean wait "
                  << summary.mean_wait_min << " min, mean platooning rate "
                  << summary.mean_platooning_rate << ", nonzero-utility fraction "
                  << summary.frac_nonzero_utility << '\n';
    });
}

int cmd_report(const ReportArgs& args) {
    return guarded("report", [&] {
        const Report report = load_report(args.log_dir);
        write_report_files(report, args.out_dir);
        std::cout << "wrote report for " << report.rows.size() << " trucks to " << args.out_dir
                  << '\n';
    });
}

int cmd_make_network(const MakeNetworkArgs& args) {
    return guarded("make-network", [&] {
        const Network net = synthetic_network(args.hubs, args.seed);
        if (const auto parent = std::filesystem::path(args.out_file).parent_path();
            !parent.empty())
            std::filesystem::create_directories(parent);
        save_network(net, args.out_file);
        std::cout << "wrote " << net.hubs().size() << " hubs, " << net.segments().size()
                  << " segments to " << args.out_file << '\n';
    });
}

}  // namespace hubsim
