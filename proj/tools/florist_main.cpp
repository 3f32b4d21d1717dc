#include <iostream>
#include <string>
#include <vector>

#include "florist/cli_io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return florist::run_command(args, std::cout, std::cerr);
}
