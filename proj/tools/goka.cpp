#include <iostream>
#include <string>
#include <vector>

#include "goka/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return goka::run_cli(args, std::cin, std::cout, std::cerr);
}
