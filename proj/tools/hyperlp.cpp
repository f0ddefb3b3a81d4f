#include <iostream>
#include <string>
#include <vector>

#include "hyperlp/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return hyperlp::cli::dispatch(args, std::cout, std::cerr);
}
