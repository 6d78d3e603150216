#include <iostream>
#include <string>
#include <vector>

#include "gradedq_cli/dispatch.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gradedq::cli::run(args, std::cout, std::cerr);
}
