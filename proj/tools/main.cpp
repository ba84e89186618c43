#include <iostream>

#include "pcaf/cli.hpp"

int main(int argc, char** argv) {
  return pcaf::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
