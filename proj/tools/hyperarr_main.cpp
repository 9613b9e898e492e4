#include <iostream>

#include "hyperarr/cli.hpp"

int main(int argc, char** argv) { return hyperarr::run_cli(argc, argv, std::cout, std::cerr); }
