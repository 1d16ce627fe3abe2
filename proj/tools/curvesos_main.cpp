#include <iostream>

#include "curvesos/cli.hpp"

int main(int argc, char** argv) { return curvesos::run_main(argc, argv, std::cout, std::cerr); }
