#pragma once

#include <cstdint>
#include <random>

// Seed for randomized tests; override with --seed=N on the test binary.
std::uint64_t test_seed();

inline std::mt19937_64 seeded_rng(std::uint64_t salt) { return std::mt19937_64(test_seed() * 1000003 + salt); }
