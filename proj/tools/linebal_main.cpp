#include <iostream>

#include "linebal/cli.hpp"

int main(int argc, char** argv) { return linebal::run_cli(argc, argv, std::cout, std::cerr); }
