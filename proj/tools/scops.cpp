#include <iostream>

#include "scops/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return scops::cli::run(args, std::cout, std::cerr);
}
