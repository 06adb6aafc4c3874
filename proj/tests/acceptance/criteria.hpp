#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace signhom::acceptance {

struct Criterion {
  int id = 0;
  std::string title;
  bool check_passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;

  bool passed() const { return check_passed && seconds <= budget_seconds; }
};

struct Options {
  std::uint64_t seed = 20240601;
  /// Empty means every criterion.
  std::set<int> only;
  /// Fixture directory holding octahedron.pc and icosahedron.pc.
  std::string fixtures;
};

constexpr int criterion_count = 13;

std::vector<Criterion> run(const Options& options, const std::function<void(const Criterion&)>& on_result = {});

/// "PASS  3  title  (0.12 s / 5 s)  detail"
std::string format_line(const Criterion& c);

}  // namespace signhom::acceptance
