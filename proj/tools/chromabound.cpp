#include <iostream>

#include "chromabound/cli.hpp"

int main(int argc, char** argv) { return chromabound::run_cli(argc, argv, std::cout, std::cerr); }
