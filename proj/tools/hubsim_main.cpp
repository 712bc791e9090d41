#include <cstdint>
#include <string>

#include "CLI11.hpp"
#include "hubsim/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Hub-based truck platoon coordination: scenario generation, simulation, reports"};
    app.require_subcommand(1);

    hubsim::GenerateArgs gen;
    CLI::App* generate = app.add_subcommand(
        "generate", "Draw a randomized scenario (trucks, routes, start times) on a network");
    generate->add_option("--network", gen.config.network_file, "Network JSON file")
        ->required();
    generate->add_option("--trucks", gen.config.trucks, "Number of trucks")->required();
    generate->add_option("--seed", gen.config.seed, "Random seed")->required();
    generate->add_option("--out", gen.out_dir, "Scenario output directory")->required();
    generate->add_option("--window-first", gen.config.window_first,
                         "Earliest start tick (default 480 = 8:00 a.m.)");
    generate->add_option("--window-last", gen.config.window_last,
                         "Latest start tick (default 540 = 9:00 a.m.)");
    generate->add_option("--wait-cap", gen.config.wait_max_per_hub,
                         "Per-hub waiting cap in minutes (default 30)");
    generate->add_option("--wait-budget", gen.config.wait_budget_total,
                         "Trip-wide waiting budget in minutes (default 60)");
    generate->add_option("--xi", gen.config.xi_per_min_sek,
                         "Platooning benefit, SEK per minute per shared segment (default 0.96)");
    generate->add_option("--eps", gen.config.eps_per_min_sek,
                         "Waiting cost, SEK per minute (default 0.75)");

    hubsim::RunArgs run;
    CLI::App* run_cmd = app.add_subcommand("run", "Simulate a scenario directory");
    run_cmd->add_option("--scenario", run.scenario_dir, "Scenario directory")->required();
    run_cmd->add_option("--out", run.out_dir, "Output directory for log, CSV and summary")
        ->required();

    hubsim::ReportArgs rep;
    CLI::App* report = app.add_subcommand("report", "Build ranked plot series from a run's output");
    report->add_option("--log", rep.log_dir, "Run output directory")->required();
    report->add_option("--out", rep.out_dir, "Report output directory")->required();

    hubsim::MakeNetworkArgs net;
    CLI::App* make_network =
        app.add_subcommand("make-network", "Emit a synthetic regional hub network");
    make_network->add_option("--hubs", net.hubs, "Hub count (default 84)");
    make_network->add_option("--seed", net.seed, "Random seed");
    make_network->add_option("--out", net.out_file, "Network JSON output file")->required();

    CLI11_PARSE(app, argc, argv);

    if (generate->parsed()) return hubsim::cmd_generate(gen);
    if (run_cmd->parsed()) return hubsim::cmd_run(run);
    if (report->parsed()) return hubsim::cmd_report(rep);
    return hubsim::cmd_make_network(net);
}
