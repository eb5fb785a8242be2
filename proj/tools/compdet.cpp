#include <iostream>

#include "compdet/cli.hpp"

int main(int argc, char** argv) { return compdet::run_cli(argc, argv, std::cout, std::cerr); }
