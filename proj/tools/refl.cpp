#include <iostream>
#include <string>
#include <vector>

#include "refl/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const refl::cli::CommandResult r = refl::cli::run(args);
  if (r.exit_status == refl::cli::kExitOk) {
    std::cout << r.output();
  } else {
    if (!r.text.empty()) std::cout << r.text;
    std::cerr << "refl " << r.command << ": " << r.error;
    if (r.error.empty() || r.error.back() != '\n') std::cerr << '\n';
  }
  return r.exit_status;
}
