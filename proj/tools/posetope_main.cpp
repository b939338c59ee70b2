#include <iostream>

#include "posetope/cli.hpp"

int main(int argc, char** argv) { return posetope::cli_main(argc, argv, std::cout, std::cerr); }
