#include <iostream>
#include <string>
#include <vector>

#include "palgen/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return palgen::cli::run(args, std::cout, std::cerr);
}
