/**
 * @file bgt_main.cpp
 * @brief Entry point for the bgt command-line tool.
 *
 * All behaviour lives in bgt/cli.hpp so the test suite can drive the exact
 * same dispatch path in-process; this translation unit only adapts argv.
 */
#include <iostream>
#include <string>
#include <vector>

#include "bgt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return bgt::cli::run(std::move(args), std::cout, std::cerr);
}
