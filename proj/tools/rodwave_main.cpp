#include <vector>

#include "rodwave/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rodwave::cli::run_cli(args);
}
