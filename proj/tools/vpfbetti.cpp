#include <iostream>

#include "vpf/cli.hpp"

int main(int argc, char** argv) { return vpf::cli::run({argv + 1, argv + argc}, std::cout, std::cerr); }
