#include <iostream>

#include "polyapprox/cli.hpp"

int main(int argc, char** argv) {
  return polyapprox::run_cli(argc, argv, std::cout, std::cerr);
}
