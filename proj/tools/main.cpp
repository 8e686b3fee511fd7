#include <iostream>
#include <string>
#include <vector>

#include "monoconv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return monoconv::cli::main_entry(args, std::cin, std::cout, std::cerr);
}
