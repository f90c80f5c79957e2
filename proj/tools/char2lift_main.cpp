#include <iostream>
#include <string>
#include <vector>

#include "char2lift/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return char2lift::run_cli(args, std::cout, std::cerr);
}
