#include <iostream>
#include <string>
#include <vector>

#include "h2leader/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return h2leader::cli::run(args, std::cout, std::cerr);
}
