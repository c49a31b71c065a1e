#include <iostream>
#include <string>
#include <vector>

#include "nfl/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nfl::cli::run(args, std::cout, std::cerr);
}
