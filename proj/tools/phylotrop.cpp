#include "phylotrop/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return phylotrop::cli::dispatch(args, std::cout, std::cerr);
}
