#include <iostream>
#include <string>
#include <vector>

#include "mateq/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return mateq::run_cli(args, std::cout, std::cerr);
}
