#include <iostream>
#include <string>
#include <vector>

#include "nacm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nacm::run_cli(args, std::cin, std::cout, std::cerr);
}
