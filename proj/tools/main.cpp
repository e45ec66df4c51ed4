#include <iostream>
#include <vector>

#include "stepcomp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stepcomp::run_cli(args, std::cout, std::cerr);
}
