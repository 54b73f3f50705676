#include <iostream>

#include "dsrg/cli.hpp"

int main(int argc, char** argv) { return dsrg::run_cli(argc, argv, std::cout, std::cerr); }
