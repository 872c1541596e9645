#include <iostream>

#include "cli.h"

int main(int argc, char** argv) {
  return gvcam::cli::Run(argc, argv, std::cin, std::cout, std::cerr);
}
