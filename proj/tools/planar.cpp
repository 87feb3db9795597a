#include <iostream>
#include <string>
#include <vector>

#include "planar/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return planar::cli::run(args, std::cout, std::cerr);
}
