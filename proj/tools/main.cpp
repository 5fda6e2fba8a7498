#include <iostream>

#include "bipham/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bipham::cli::run(args, std::cout, std::cerr);
}
