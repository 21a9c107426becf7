#include <iostream>

#include "cperm/cli/commands.hpp"

int main(int argc, char** argv) { return cperm::cli::run(argc, argv, {std::cout, std::cerr}); }
