#include <iostream>

#include "cubegroup/cli.hpp"

int main(int argc, char** argv) {
  return cubegroup::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
