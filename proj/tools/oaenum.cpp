#include <iostream>
#include <string>
#include <vector>

#include "oa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return oa::cli::run(args, std::cout, std::cerr);
}
