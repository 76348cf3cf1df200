#include <iostream>
#include <string>
#include <vector>

#include "semiwell/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return semiwell::cli::run(args, std::cout, std::cerr);
}
