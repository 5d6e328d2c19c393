#include <iostream>
#include <string>
#include <vector>

#include "gl2lab/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gl2lab::cli::run_cli(args, std::cout, std::cerr);
}
