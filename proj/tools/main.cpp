#include <iostream>

#include "smallsupport/cli.hpp"

int main(int argc, char** argv) {
  return smallsupport::cli::dispatch(argc, argv, std::cout, std::cerr);
}
