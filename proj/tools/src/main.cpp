#include <iostream>

#include "khplasma/cli.hpp"

int main(int argc, char** argv) {
    using namespace khplasma::cli;
    const std::vector<std::string> args(argv + 1, argv + argc);
    auto parsed = parse_args(args);
    if (auto* stop = std::get_if<ParseStop>(&parsed)) {
        (stop->exit_code == kExitOk ? std::cout : std::cerr) << stop->message;
        return stop->exit_code;
    }
    return run(std::get<RunConfig>(parsed), std::cout, std::cerr);
}
