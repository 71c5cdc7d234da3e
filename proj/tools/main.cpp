#include <iostream>
#include <string>
#include <vector>

#include "jframe/io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jframe::io::run_command(args, std::cout, std::cerr);
}
