#include <iostream>

#include "cyclic_stab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cstab::run_cli(args, std::cout, std::cerr);
}
