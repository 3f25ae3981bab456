#include <iostream>
#include <string>
#include <vector>

#include "nhol/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return nhol::run_cli(args, std::cout, std::cerr);
}
