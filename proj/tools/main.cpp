#include <iostream>

#include "hstretch/cli.hpp"

int main(int argc, char** argv) { return hstretch::cli::run(argc, argv, std::cout, std::cerr); }
