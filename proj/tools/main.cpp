#include <iostream>
#include <string>
#include <vector>

#include "wcurve/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wcurve::run_command(args, std::cout, std::cerr);
}
