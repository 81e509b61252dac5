#include <iostream>

#include "indeperm/cli.hpp"

int main(int argc, char** argv) {
  return indeperm::run_cli(argc, argv, std::cout, std::cerr);
}
