#include <iostream>

#include "memcost/cli/commands.hpp"

int main(int argc, char** argv) {
  return memcost::cli::run(argc, argv, std::cout, std::cerr);
}
