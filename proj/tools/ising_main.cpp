#include <iostream>

#include "ising/cli.hpp"

int main(int argc, char** argv) { return ising::cli::run(argc, argv, std::cout, std::cerr); }
