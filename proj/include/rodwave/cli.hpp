#ifndef RODWAVE_CLI_HPP
#define RODWAVE_CLI_HPP

#include <string>
#include <vector>

namespace rodwave::cli {

struct Options {
    std::string config_path;
    std::string out_dir;  // overrides the config's `out` when nonempty
    int jobs = 0;         // 0: hardware concurrency
    unsigned long seed = 0;
};

// Exit codes: 0 success (a detected blowup is a result, not a failure),
// 2 config error, 3 internal error.
int cmd_simulate(const Options& opts);
int cmd_analyze(const Options& opts);
int cmd_sweep(const Options& opts);

/// Full argv-level entry point (subcommands simulate|analyze|sweep).
int run_cli(const std::vector<std::string>& args);

}  // namespace rodwave::cli

#endif
