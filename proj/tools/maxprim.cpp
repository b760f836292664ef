#include <iostream>

#include "maxprim/cli.hpp"

int main(int argc, char** argv) { return maxprim::cli::run(argc, argv, std::cout, std::cerr); }
