#include <iostream>
#include <string>
#include <vector>

#include "fibpascal/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return fibpascal::run_cli(args, std::cout, std::cerr);
}
