#include <iostream>

#include "terratri/cli_app.hpp"

int main(int argc, char** argv) {
    return terratri::cli::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
