#include <iostream>
#include <string>
#include <vector>

#include "deplen/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return deplen::cli::run(args, std::cout, std::cerr);
}
