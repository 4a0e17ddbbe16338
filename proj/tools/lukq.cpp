#include <iostream>
#include <string>
#include <vector>

#include "lukq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lukq::cli::run(args, std::cout, std::cerr);
}
