#include <iostream>
#include <string>
#include <vector>

#include "xoverlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return xoverlab::run(args, std::cout, std::cerr);
}
