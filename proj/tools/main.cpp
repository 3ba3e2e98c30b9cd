#include <iostream>

#include "saddle/cli/commands.hpp"

int main(int argc, char** argv) { return saddle::cli::run(argc, argv, std::cout, std::cerr); }
