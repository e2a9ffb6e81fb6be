#include <iostream>
#include <string>
#include <vector>

#include "liftaut/cli.hpp"

int main(int argc, char** argv) {
  return liftaut::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
