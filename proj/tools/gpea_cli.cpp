#include <iostream>

#include "gpea/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gpea::cli::run(args, std::cout, std::cerr);
}
