#include <iostream>

#include "boolnet/cli.hpp"

int main(int argc, char** argv) {
  return boolnet::run_cli(argc, argv, std::cout, std::cerr);
}
