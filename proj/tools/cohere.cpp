#include <iostream>

#include "cohere/cli.hpp"

int main(int argc, char** argv) { return cohere::run_cli(argc, argv, std::cout, std::cerr); }
