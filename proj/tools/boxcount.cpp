#include <iostream>

#include "boxcount/cli/cli.hpp"

int main(int argc, char** argv) {
  return boxcount::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
