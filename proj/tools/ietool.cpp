#include <iostream>

#include "iet/cli.hpp"

int main(int argc, char** argv) {
  return iet::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
