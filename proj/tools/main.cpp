#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return scheme_forge::cli::run(argc, argv, std::cout, std::cerr); }
