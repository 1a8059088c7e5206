#include <iostream>

#include "happy/cli.hpp"

int main(int argc, char** argv) {
  return happy::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
