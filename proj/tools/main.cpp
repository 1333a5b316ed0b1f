#include <iostream>
#include <string>
#include <vector>

#include "skinning/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return skinning::run_cli(args, std::cout, std::cerr);
}
