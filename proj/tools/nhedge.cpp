#include <iostream>
#include <string>
#include <vector>

#include "nhedge/bench/experiment.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return nhedge::bench::cli_main(args, std::cout, std::cerr);
}
