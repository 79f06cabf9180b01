#include <iostream>
#include <string>
#include <vector>

#include "semsum/cli.hpp"

int main(int argc, char** argv) {
  return semsum::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
