#include "tightspan/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tightspan::cli_dispatch(argc, argv, std::cout, std::cerr); }
