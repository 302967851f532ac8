#include <iostream>
#include <vector>

#include "check_tool.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return floppy::cli::run_check(args, std::cout, std::cerr);
}
