#include <iostream>
#include <string>
#include <vector>

#include "chz/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return chz::run_cli(args, std::cout, std::cerr);
}
