#include <iostream>
#include <string>
#include <vector>

#include "ffhyper/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ffhyper::run_cli(args, std::cout, std::cerr);
}
