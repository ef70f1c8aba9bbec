#include <iostream>

#include "ltu/cli.hpp"

int main(int argc, char** argv) { return ltu::cli::run(argc, argv, std::cout, std::cerr); }
