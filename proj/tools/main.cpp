#include <iostream>

#include "dissrho/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dissrho::cli::run(args, std::cin, std::cout, std::cerr);
}
