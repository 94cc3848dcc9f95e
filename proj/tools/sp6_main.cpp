#include <iostream>
#include <string>
#include <vector>

#include "sp6/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return sp6::run_cli(args, std::cout, std::cerr);
}
