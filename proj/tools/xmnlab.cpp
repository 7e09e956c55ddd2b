#include <iostream>
#include <string>
#include <vector>

#include "xmnlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return xmnlab::run_cli(args, std::cout, std::cerr);
}
