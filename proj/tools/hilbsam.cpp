#include <iostream>

#include "hilbsam/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hilbsam::cli::run(args, std::cout, std::cerr);
}
