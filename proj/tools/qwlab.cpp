#include <iostream>

#include "qwlab/cli.hpp"

int main(int argc, char** argv) { return qwlab::run_cli(argc, argv, std::cout, std::cerr); }
