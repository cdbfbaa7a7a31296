#include <iostream>

#include "jrepair/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jrepair::run_cli(args, std::cout, std::cerr);
}
