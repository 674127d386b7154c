#include <iostream>
#include <string>
#include <vector>

#include "evoqsi/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return evoqsi::cli::cli_main(args, std::cout, std::cerr);
}
