#include <iostream>
#include <string>
#include <vector>

#include "hkface/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hkface::cli::run(args, std::cout, std::cerr);
}
