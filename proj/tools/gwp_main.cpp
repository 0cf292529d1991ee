#include <iostream>

#include "gwp/cli.hpp"

int main(int argc, char** argv) {
    return gwp::cli::run_cli(argc, argv, std::cout, std::cerr);
}
