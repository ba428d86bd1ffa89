#include <iostream>

#include "motzkin/cli.hpp"

int main(int argc, char** argv) {
  return motzkin::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
