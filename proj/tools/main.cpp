#include <iostream>

#include "xhopf_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return xhopf::cli::run(args, std::cin, std::cout, std::cerr);
}
