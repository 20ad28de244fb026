#include <iostream>

#include "stacky/cli.hpp"

int main(int argc, char** argv) { return stacky::run_cli(argc, argv, std::cout, std::cerr); }
