#include <iostream>

#include "fuzzcal_cli/cli.hpp"

int main(int argc, char** argv) {
  return fuzzcal::cli::run(argc, argv, std::cout, std::cerr);
}
