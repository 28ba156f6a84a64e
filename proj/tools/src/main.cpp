#include <iostream>

#include "jackbetti_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = jb::cli::run(args);
  auto& stream = r.exit_code == jb::cli::kExitInvalid && !r.json_output ? std::cerr : std::cout;
  stream << r.output();
  return r.exit_code;
}
