#include <iostream>

#include "tn3/cli.hpp"

int main(int argc, char** argv) {
    return tn3::run_cli(argc, argv, std::cout, std::cerr);
}
