#include <iostream>

#include "schedalg/cli/cli.hpp"

int main(int argc, char** argv) {
  return schedalg::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
