#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const auto result = signhom::cli::dispatch(args, std::cout, std::cerr);
  return signhom::cli::exit_code(result.status);
}
