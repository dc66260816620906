#include <iostream>

#include "adhm/cli/commands.hpp"

int main(int argc, char** argv) { return adhm::cli::run_cli(argc, argv, std::cout, std::cerr); }
