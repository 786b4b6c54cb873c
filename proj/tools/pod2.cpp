#include <iostream>
#include <string>
#include <vector>

#include "pod2/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pod2::cli::run(args, std::cout, std::cerr);
}
