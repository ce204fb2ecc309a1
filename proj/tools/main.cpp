#include <iostream>
#include <vector>

#include "tgwa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tgwa::run_command(args, std::cout, std::cerr);
}
