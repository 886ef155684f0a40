#include <iostream>
#include <string>
#include <vector>

#include "qfe/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qfe::cli_main(args, std::cout, std::cerr);
}
