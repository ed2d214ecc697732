#include <iostream>
#include <string>
#include <vector>

#include "bibaz/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return bibaz::run_cli(args, std::cout, std::cerr);
}
