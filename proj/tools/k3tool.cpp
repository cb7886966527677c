#include <iostream>

#include "k3lat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  k3lat::CommandResult r = k3lat::run(args);
  std::cout << r.text;
  if (r.status == k3lat::Status::error && !r.json) {
    for (const auto& d : r.diagnostics) std::cerr << "error [" << r.error_code << "]: " << d << "\n";
    if (r.exit_code == 2) std::cerr << "run with --help for usage\n";
  }
  return r.exit_code;
}
