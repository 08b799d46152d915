#include <iostream>

#include "eqc/cli.hpp"

int main(int argc, char** argv) {
  return eqc::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
