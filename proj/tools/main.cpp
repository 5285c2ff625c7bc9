#include <string>
#include <vector>

#include "ortho2c/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ortho2c::run_cli(args);
}
