#include <iostream>
#include <string>
#include <vector>

#include "wellsep/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wellsep::run_cli(args, std::cout, std::cerr);
}
