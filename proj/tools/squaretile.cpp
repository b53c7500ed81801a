#include <iostream>

#include "squaretile/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return squaretile::run_cli(args, std::cin, std::cout, std::cerr);
}
