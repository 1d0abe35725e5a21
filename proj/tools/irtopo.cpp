#include <iostream>

#include "irtopo/cli.hpp"

int main(int argc, char** argv) { return irtopo::cli::run(argc, argv, std::cout, std::cerr); }
