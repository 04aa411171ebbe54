#include <iostream>

#include "abicap/cli.hpp"

int main(int argc, char** argv) {
  return abicap::parse_and_dispatch(argc, argv, std::cout, std::cerr);
}
