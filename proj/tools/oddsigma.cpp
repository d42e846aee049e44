#include <iostream>
#include <string>
#include <vector>

#include "oddsigma/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return oddsigma::cli::run(args, std::cout, std::cerr);
}
