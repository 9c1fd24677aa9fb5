#include <iostream>

#include "wgraph/cli.hpp"

int main(int argc, char** argv) {
  return wgraph::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
