#include <iostream>
#include <string>
#include <vector>

#include "wgmsense/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wgmsense::cli::run(args, std::cout, std::cerr);
}
