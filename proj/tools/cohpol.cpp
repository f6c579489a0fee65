#include <iostream>

#include "cohpol/cli.hpp"

int main(int argc, char** argv) { return cohpol::cli::main(argc, argv, std::cout, std::cerr); }
