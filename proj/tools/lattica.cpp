#include <iostream>
#include <string>
#include <vector>

#include "lattica/pipeline.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return lattica::cli_main(args, std::cout, std::cerr);
}
