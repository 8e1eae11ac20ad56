#include <iostream>
#include <string>
#include <vector>

#include "dinfty/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dinfty::run_cli(std::move(args), std::cout, std::cerr);
}
