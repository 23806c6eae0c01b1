#include <iostream>
#include <string>
#include <vector>

#include "qmason/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qmason::run_cli(args, std::cout, std::cerr);
}
