#include <iostream>

#include "ncg/cli.hpp"

int main(int argc, char** argv) { return ncg::run_cli(argc, argv, std::cout, std::cerr); }
