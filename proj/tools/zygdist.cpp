#include <iostream>
#include <string>
#include <vector>

#include "zygdist/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return zyg::run_command(args, std::cout, std::cerr);
}
