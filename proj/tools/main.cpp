#include <iostream>
#include <string>
#include <vector>

#include "dyck2d_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dyck2d::cli::run(args, std::cin, std::cout, std::cerr);
}
