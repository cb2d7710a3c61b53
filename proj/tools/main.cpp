#include <iostream>

#include "gqs/cli.hpp"

int main(int argc, char** argv) {
  return gqs::run(argc, argv, std::cin, std::cout, std::cerr);
}
