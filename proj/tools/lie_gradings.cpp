#include <iostream>
#include <string>
#include <vector>

#include "liegrad/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liegrad::run_cli(args, std::cout, std::cerr);
}
