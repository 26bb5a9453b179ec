#include <iostream>
#include <string>
#include <vector>

#include "gauss/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return gauss::cli::run(args, std::cout, std::cerr);
}
