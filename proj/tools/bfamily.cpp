#include <iostream>

#include "bfamily/cli/commands.hpp"

int main(int argc, char** argv) { return bfamily::cli::run_cli(argc, argv, std::cout, std::cerr); }
