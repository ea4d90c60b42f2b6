#include <iostream>
#include <string>
#include <vector>

#include "cwtool/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cwtool::run_cli(args, std::cout, std::cerr);
}
