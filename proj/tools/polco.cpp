#include <iostream>

#include "polco/cli.hpp"

int main(int argc, char** argv) { return polco::cli::run(argc, argv, std::cout, std::cerr); }
