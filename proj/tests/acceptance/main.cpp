// One line per acceptance criterion; exit status 1 if any fails.

#include <iostream>

#include <CLI11.hpp>

#include "criteria.hpp"

int main(int argc, char** argv) {
  signhom::acceptance::Options opt;
  opt.fixtures = SIGNHOM_FIXTURES_DIR;
  std::vector<int> only;
  CLI::App app{"acceptance criteria"};
  app.add_option("--seed", opt.seed);
  app.add_option("--only", only, "criterion ids to run");
  app.add_option("--fixtures", opt.fixtures);
  CLI11_PARSE(app, argc, argv);
  opt.only.insert(only.begin(), only.end());

  int failed = 0;
  signhom::acceptance::run(opt, [&](const signhom::acceptance::Criterion& c) {
    std::cout << signhom::acceptance::format_line(c) << std::endl;
    failed += !c.passed();
  });
  return failed ? 1 : 0;
}
