#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cli_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> seed_env;
  if (const char* s = std::getenv("DEPMOD_SEED")) seed_env = s;
  return depmod::cli::run(std::move(args), std::cout, std::cerr, seed_env);
}
