#include <iostream>

#include "mdim/cli.hpp"

int main(int argc, char** argv) {
  return mdim::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
