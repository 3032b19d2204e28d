#include <iostream>

#include "slideocam/cli.hpp"

int main(int argc, char** argv) { return slideocam::cli::run(argc, argv, std::cout, std::cerr); }
