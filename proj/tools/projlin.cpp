#include <iostream>

#include "projlin/cli.hpp"

int main(int argc, char** argv) {
    return projlin::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
