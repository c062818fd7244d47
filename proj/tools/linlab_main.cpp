#include <iostream>
#include <string>
#include <vector>

#include "linlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return linlab::dispatch(args, std::cout, std::cerr);
}
