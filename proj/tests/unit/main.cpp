#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstring>
#include <iostream>
#include <string>

#include "seed.hpp"

namespace {
std::uint64_t g_seed = 20240601;
}

std::uint64_t test_seed() { return g_seed; }

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (std::strncmp(argv[i], "--seed=", 7) == 0) g_seed = std::stoull(argv[i] + 7);
  doctest::Context context;
  context.applyCommandLine(argc, argv);
  return context.run();
}
