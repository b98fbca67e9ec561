#include <iostream>

#include "lexicov/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lexicov::cli::run(args, std::cout, std::cerr);
}
