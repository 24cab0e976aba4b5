#include <iostream>
#include <string>
#include <vector>

#include "discoh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return discoh::run(args, std::cout, std::cerr);
}
