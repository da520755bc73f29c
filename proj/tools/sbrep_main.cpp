#include <iostream>
#include <string>
#include <vector>

#include "sbrep/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sbrep::run_cli(args, std::cout, std::cerr);
}
