#include "ulamfloat/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ulamfloat::run_cli(argc, argv, std::cout, std::cerr); }
