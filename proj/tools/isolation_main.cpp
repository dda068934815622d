#include <iostream>
#include <string>
#include <vector>

#include "isolation/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return isolation::run_cli(args, std::cout, std::cerr);
}
