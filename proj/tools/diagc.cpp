#include <iostream>

#include "diagc/cli.hpp"

int main(int argc, char** argv) { return diagc::run(argc, argv, std::cout, std::cerr); }
