#include <iostream>
#include <string>
#include <vector>

#include "ngo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ngo::cli::run(args, std::cout, std::cerr);
}
