#include <iostream>

#include "eqschubert/cli.hpp"

int main(int argc, char** argv) { return eqschubert::run_cli(argc, argv, std::cout, std::cerr); }
