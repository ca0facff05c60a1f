#include <iostream>

#include "g2vir/cli/run.hpp"

int main(int argc, char** argv) { return g2vir::cli::run(argc, argv, std::cout, std::cerr); }
