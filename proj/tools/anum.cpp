#include <iostream>

#include "anum/cli.hpp"

int main(int argc, char** argv) { return anum::run_cli(argc, argv, std::cout, std::cerr); }
