#include <iostream>

#include "ewkb/cli.hpp"

int main(int argc, char** argv) { return ewkb::run_cli(argc, argv, std::cout, std::cerr); }
