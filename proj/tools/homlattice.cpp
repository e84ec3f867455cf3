#include <iostream>
#include <string>
#include <vector>

#include "homlattice/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return homlattice::cli::run(args, std::cout, std::cerr);
}
