#include <iostream>

#include "bim/cli.hpp"

int main(int argc, char** argv) { return bim::run_cli(argc, argv, std::cout, std::cerr, std::cin); }
