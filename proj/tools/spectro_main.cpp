#include <iostream>
#include <vector>

#include "spectro/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return spectro::run_cli(args, std::cout, std::cerr);
}
