#include <iostream>

#include "psiam/cli.hpp"

int main(int argc, char **argv) { return psiam::cli::run(argc, argv, std::cout, std::cerr); }
