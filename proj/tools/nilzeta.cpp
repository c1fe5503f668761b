#include <iostream>

#include "nilzeta/cli.hpp"

int main(int argc, char** argv) { return nilzeta::run_cli(argc, argv, std::cout, std::cerr); }
