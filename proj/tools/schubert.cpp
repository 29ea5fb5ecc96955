#include <iostream>

#include "schubert/cli.hpp"

int main(int argc, char** argv) { return schubert::cli::run(argc, argv, std::cout, std::cerr); }
