#include <iostream>
#include <string>
#include <vector>

#include "polyeuler/cli.hpp"

int main(int argc, char** argv) {
  return polyeuler::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
