#include <iostream>
#include <string>
#include <vector>

#include "backbone/cli_main.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return backbone::cli::run_cli(args, std::cout, std::cerr);
}
