#include <iostream>

#include "whlab/cli/cli.hpp"

int main(int argc, char** argv) {
  auto result = whlab::cli::run({argv + 1, argv + argc});
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
