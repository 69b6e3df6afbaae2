#include <string>
#include <vector>

#include "orch5g/harness.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return orch5g::harness::run_cli(args);
}
