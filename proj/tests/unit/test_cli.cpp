#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#include "cli.hpp"
#include "signhom/io.hpp"
#include "signhom/targets.hpp"
#include "signhom/witnesses.hpp"

using namespace signhom;
using cli::Status;

namespace {

struct Run {
  Status status;
  nlohmann::json payload;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "signhom");
  std::ostringstream out, err;
  auto r = cli::dispatch(args, out, err);
  return {r.status, r.payload, out.str(), err.str()};
}

std::string write_temp(const std::string& tag, const SignifiedGraph& g) {
  const auto path = std::filesystem::temp_directory_path() /
                    ("signhom-cli-" + tag + "-" + std::to_string(::getpid()) + ".json");
  std::ofstream(path) << graph_to_json(g).dump();
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("usage errors exit 3") {
    CHECK(run({}).status == Status::error);
    CHECK(run({"frobnicate"}).status == Status::error);
    CHECK(run({"build"}).status == Status::error);
    CHECK(run({"build", "sp-7"}).status == Status::error);
    CHECK(run({"build", "sp-5", "--format", "png"}).status == Status::error);
    CHECK(run({"chi2", "/nonexistent.json"}).status == Status::error);
    CHECK(run({"props", "--target", "sp-5", "--check", "Q:1:2"}).status == Status::error);
    CHECK(run({"--jobs", "0", "table1"}).status == Status::error);
    CHECK_FALSE(run({"build"}).err.empty());
    CHECK(run({"--help"}).status == Status::ok);
  }

  TEST_CASE("build") {
    const auto j = run({"build", "tromp-5"});
    CHECK(j.status == Status::ok);
    CHECK(graph_from_json(nlohmann::json::parse(j.out)) == build_tromp(5).graph);
    const auto dot = run({"build", "G1", "--format", "dot"});
    CHECK(dot.status == Status::ok);
    CHECK(dot.out.find("style=dashed") != std::string::npos);
  }

  TEST_CASE("check-hom exit codes") {
    const auto g1 = write_temp("g1", build_witness("G1"));
    const auto g3 = write_temp("g3", build_witness("G3"));
    const auto k4 = write_temp("k4", build_k4star());
    CHECK(run({"check-hom", g1, "--target", "sp-5"}).status == Status::ok);
    CHECK(run({"check-hom", g3, "--target", "sp-5"}).status == Status::property_failed);
    CHECK(run({"check-hom", g3, "--target", "tromp-5", "--node-limit", "2"}).status == Status::indeterminate);
    CHECK(run({"check-hom", g1, "--target-file", k4, "--signed"}).status == Status::ok);
    CHECK(run({"check-hom", g1}).status == Status::error);
    CHECK(run({"check-hom", g1, "--target", "sp-5", "--order", "random"}).status == Status::error);
    const auto found = run({"check-hom", g1, "--target", "tromp-5", "--order", "natural", "--no-symmetry"});
    CHECK(found.payload["status"] == "found");
    CHECK(found.payload["map"].size() == 6);
    for (const auto& p : {g1, g3, k4}) std::filesystem::remove(p);
  }

  TEST_CASE("chromatic numbers") {
    const auto g1 = write_temp("chi", build_witness("G1"));
    const auto r = run({"chi2", g1});
    CHECK(r.status == Status::ok);
    CHECK(r.payload["value"] == 4);
    CHECK(run({"chis", g1}).status == Status::ok);
    const auto g3 = write_temp("chi3", build_witness("G3"));
    CHECK(run({"chi2", g3, "--node-limit", "3"}).status == Status::indeterminate);
    std::filesystem::remove(g1);
    std::filesystem::remove(g3);
  }

  TEST_CASE("props") {
    CHECK(run({"props", "--target", "at-sp-25", "--check", "P:3:4"}).status == Status::ok);
    CHECK(run({"props", "--target", "at-sp-25", "--check", "P:3:5"}).status == Status::property_failed);
    const auto r = run({"--json", "props", "--target", "tromp-5", "--check", "P:1:5", "--check", "P:2:2", "--orbits"});
    CHECK(r.status == Status::ok);
    CHECK(r.payload["reports"].size() == 2);
    CHECK(run({"props", "--target", "k4star", "--orbits"}).status == Status::error);
  }

  TEST_CASE("table1 and witnesses") {
    CHECK(run({"table1"}).status == Status::ok);
    CHECK(run({"witnesses"}).status == Status::ok);
    const auto emitted = run({"witnesses", "--emit", "G3"});
    CHECK(emitted.status == Status::ok);
    CHECK(graph_from_json(nlohmann::json::parse(emitted.out)) == build_witness("G3"));
  }

  TEST_CASE("campaign") {
    const std::string oct = std::string(SIGNHOM_FIXTURES_DIR) + "/octahedron.pc";
    CHECK(run({"campaign", "--input", oct}).status == Status::ok);
    CHECK(run({"campaign", "--input", oct, "--target", "k4star"}).status == Status::property_failed);
    CHECK(run({"campaign", "--input", oct, "--stop-after", "5"}).status == Status::indeterminate);
    CHECK(run({"campaign", "--input", "/nonexistent.pc"}).status == Status::error);
    const auto bad = std::filesystem::temp_directory_path() / ("signhom-cli-bad-" + std::to_string(::getpid()) + ".pc");
    std::ofstream(bad) << "garbage";
    CHECK(run({"campaign", "--input", bad.string()}).status == Status::error);
    std::filesystem::remove(bad);
  }

  TEST_CASE("selftest subset") {
    const auto r = run({"--json", "selftest", "--only", "1", "--only", "5"});
    CHECK(r.status == Status::ok);
    CHECK(r.payload["criteria"].size() == 2);
  }
}
