#include <iostream>

#include "bagcd/cli.hpp"

int main(int argc, char** argv) { return bagcd::run_cli(argc, argv, std::cout, std::cerr); }
