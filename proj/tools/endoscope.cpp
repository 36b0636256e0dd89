#include <iostream>

#include "endoscope/cli.hpp"

int main(int argc, char** argv) { return endoscope::cli_main(argc, argv, std::cout, std::cerr); }
