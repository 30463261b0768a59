#include <iostream>
#include <string>
#include <vector>

#include "kakeya/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kakeya::dispatch(args, std::cout, std::cerr);
}
