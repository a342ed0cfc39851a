#include <iostream>

#include "hopf/cli/commands.hpp"

int main(int argc, char** argv) { return hopf::cli::run(argc, argv, std::cout, std::cerr); }
