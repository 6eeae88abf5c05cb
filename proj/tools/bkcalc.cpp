#include <iostream>

#include "bk/cli/commands.hpp"

int main(int argc, char** argv) { return bk::cli::run(argc, argv, std::cout, std::cerr); }
