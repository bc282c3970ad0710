#include <iostream>
#include <string>
#include <vector>

#include "poisson_zeta/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return poisson_zeta::cli::run(args, std::cout, std::cerr);
}
