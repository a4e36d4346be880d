#include <iostream>

#include "cgsat_cli/cli.hpp"

int main(int argc, char** argv) { return cgsat::cli_main(argc, argv, std::cout, std::cerr); }
