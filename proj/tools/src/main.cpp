#include <iostream>
#include <string>
#include <vector>

#include "pluq/tools/cli.hpp"

int main(int argc, char** argv) {
  return pluq::tools::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
