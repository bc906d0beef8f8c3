#include <iostream>
#include <string>
#include <vector>

#include "harmonic2v/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return harmonic2v::cli::run_cli(args, std::cout, std::cerr);
}
