#include <iostream>
#include <string>
#include <vector>

#include "hybridcd/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hcd::run_cli(args, std::cout, std::cerr);
}
