#include <iostream>
#include <string>
#include <vector>

#include "knotchar/cli/run.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return knotchar::run_cli(args, std::cout, std::cerr);
}
