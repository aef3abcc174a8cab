#include <iostream>

#include "gsym/cli.hpp"

int main(int argc, char** argv) { return gsym::cli::run(argc, argv, std::cout, std::cerr); }
