#include <iostream>
#include <string>
#include <vector>

#include "thooks/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return thooks::cli::run(args, std::cout, std::cerr);
}
