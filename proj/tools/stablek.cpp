// SPDX-License-Identifier: MIT
#include "stablek/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stablek::run_cli(args, std::cout, std::cerr);
}
