#include <iostream>

#include "knotbound/cli.hpp"

int main(int argc, char** argv) {
  return knotbound::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
