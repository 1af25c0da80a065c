#include <iostream>
#include <string>
#include <vector>

#include "indepbound/cli.hpp"

int main(int argc, char* argv[]) {
  std::vector<std::string> args(argv, argv + argc);
  return indepbound::cli::run(args, std::cout, std::cerr);
}
