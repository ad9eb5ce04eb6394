#include <iostream>

#include "powerspec/cli.hpp"

int main(int argc, char** argv) { return powerspec::run_cli(argc, argv, std::cout, std::cerr); }
