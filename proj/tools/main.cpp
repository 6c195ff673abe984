#include <iostream>

#include "ptau/cli.hpp"

int main(int argc, char** argv) { return ptau::cli::run_cli(argc, argv, std::cout, std::cerr); }
