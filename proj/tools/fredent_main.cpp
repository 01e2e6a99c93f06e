#include <iostream>
#include <string>
#include <vector>

#include "fredent/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fredent::cli::run(args, std::cout, std::cerr);
}
