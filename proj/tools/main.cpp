#include <iostream>

#include "qwitt/cli.hpp"

int main(int argc, char** argv) { return qwitt::run_cli({argv + 1, argv + argc}, std::cout, std::cerr); }
