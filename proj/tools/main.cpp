#include <iostream>

#include "rlmc/cli.hpp"

int main(int argc, char** argv) {
  return rlmc::run_cli(argc, argv, std::cout, std::cerr);
}
