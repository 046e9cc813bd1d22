#include <iostream>
#include <string>
#include <vector>

#include "mdfold/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return mdfold::run_cli(args, std::cout, std::cerr);
}
