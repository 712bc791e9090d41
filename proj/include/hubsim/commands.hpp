#pragma once

#include <string>

#include "hubsim/scenario.hpp"

namespace hubsim {

// Command bodies behind the CLI, separated so tests can drive them directly.
// Each returns a process exit code: 0 on success, 1 with a diagnostic on
// stderr otherwise.

struct GenerateArgs {
    ScenarioConfig config;  // config.network_file names the input network
    std::string out_dir;
};
int cmd_generate(const GenerateArgs& args);

struct RunArgs {
    std::string scenario_dir;
    std::string out_dir;
};
int cmd_run(const RunArgs& args);

struct ReportArgs {
    std::string log_dir;
    std::string out_dir;
};
int cmd_report(const ReportArgs& args);

struct MakeNetworkArgs {
    int hubs = 84;
    std::uint64_t seed = 0;
    std::string out_file;
};
int cmd_make_network(const MakeNetworkArgs& args);

}  // namespace hubsim
