#include <iostream>

#include "rarefact/cli.hpp"

int main(int argc, char** argv) {
  return rarefact::runCommandLine(argc, argv, std::cout, std::cerr);
}
