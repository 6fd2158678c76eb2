#include <iostream>
#include <string>
#include <vector>

#include "concat_equidist/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return concat_equidist::cli::run(args, std::cout, std::cerr);
}
