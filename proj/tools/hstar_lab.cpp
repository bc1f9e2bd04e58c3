#include <iostream>

#include "hstarlab/cli.hpp"

int main(int argc, char** argv) { return hstarlab::run_cli(argc, argv, std::cout, std::cerr); }
