#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "seed.hpp"
#include "signhom/iso.hpp"
#include "signhom/witnesses.hpp"

using namespace signhom;

TEST_SUITE("witnesses") {
  TEST_CASE("orders") {
    const std::pair<const char*, int> expected[] = {{"G1", 6},    {"G2", 6},       {"G3", 13},       {"G4", 27},
                                                    {"G5", 729}, {"G4prime", 169}, {"G5prime", 170}};
    for (const auto& [name, n] : expected) {
      CAPTURE(name);
      const auto g = build_witness(name);
      CHECK(g.order() == n);
      CHECK(is_connected(g));
    }
    CHECK(witness_names().size() == 7);
    CHECK_THROWS_AS(build_witness("G6"), std::invalid_argument);
  }

  TEST_CASE("glue") {
    SignifiedGraph edge(2);
    edge.set_edge(0, 1, Sign::negative);
    GlueRecipe r{edge, {{1, edge, 0}, {1, edge, 1}}};
    const auto g = glue(r);
    CHECK(g.order() == 4);
    CHECK(g.sign(1, 2) == Sign::negative);
    CHECK(g.sign(3, 1) == Sign::negative);
    CHECK(attachment_vertices(r, 1) == std::vector<Vertex>{3, 1});
    r.attachments.push_back({2, edge, 0});
    CHECK_THROWS_AS(glue(r), std::invalid_argument);
    r.attachments.back() = {0, edge, 5};
    CHECK_THROWS_AS(glue(r), std::invalid_argument);
  }

  TEST_CASE("each copy in G5 induces G4") {
    const auto recipe = witness_recipe("G5");
    const auto g5 = glue(recipe);
    const auto g4 = build_witness("G4");
    for (std::size_t i = 0; i < recipe.attachments.size(); i += 97)
      CHECK(g5.induced(attachment_vertices(recipe, i)) == g4);
  }

  TEST_CASE("parity obstruction") {
    CHECK(regular_parity_obstruction(19, 9));
    CHECK(regular_parity_obstruction(9, 3));
    CHECK_FALSE(regular_parity_obstruction(19, 8));
    CHECK_FALSE(regular_parity_obstruction(10, 9));
  }

  TEST_CASE("chain and G4prime certificates") {
    const auto chain = verify_g_chain();
    CHECK(chain.passed());
    CHECK(chain.failing() == nullptr);
    CHECK(chain.stages.size() == 7);
    const auto prime = verify_g4prime();
    CHECK(prime.passed());
  }

  TEST_CASE("4-regular catalogue") {
    const auto serial = enumerate_4regular_9(Exec::serial);
    const auto parallel = enumerate_4regular_9(Exec::parallel);
    REQUIRE(serial.size() == 16);
    CHECK(serial == parallel);
    std::set<std::string> codes;
    for (const auto& g : serial) {
      CHECK(g.order() == 9);
      for (Vertex v = 0; v < 9; ++v) {
        CHECK(g.degree(v, Sign::positive) == 4);
        CHECK(g.degree(v, Sign::negative) == 4);
      }
      const auto code = canonical_form(g).code;
      codes.insert(code);
      // Canonical form is idempotent on its own output.
      CHECK(canonical_form(g.relabelled(canonical_form(g).labelling)).code == code);
    }
    CHECK(codes.size() == 16);
    const auto survivors = matching_filter(serial);
    REQUIRE(survivors.size() == 1);
    CHECK(signified_iso(survivors[0], build_sp(9).graph).has_value());
    CHECK_THROWS_AS(matching_filter({build_sp(5).graph}), std::invalid_argument);
    CHECK(verify_plus_shape().passed());
  }

  TEST_CASE("canonical form and backtracking isomorphism agree") {
    auto rng = seeded_rng(41);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 7);
      const auto a = oracle::random_graph(rng, n, 0.5);
      const auto b = rng() & 1 ? a.relabelled([&] {
        std::vector<Vertex> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
      }())
                               : oracle::random_graph(rng, n, 0.5);
      const auto iso = signified_iso(a, b);
      CHECK((canonical_form(a).code == canonical_form(b).code) == iso.has_value());
      if (iso) CHECK(a.relabelled(*iso) == b);
    }
    CHECK(oracle::connected_graphs_up_to_iso(4).size() == 6);
    std::set<std::string> codes;
    for (const auto& g : oracle::connected_graphs_up_to_iso(5)) codes.insert(canonical_form(g).code);
    CHECK(codes.size() == 21);
  }

  TEST_CASE("random outerplanar graphs") {
    auto rng = seeded_rng(42);
    for (int trial = 0; trial < 40; ++trial) {
      const auto g = random_outerplanar_girth4(rng, 8 + static_cast<int>(rng() % 20));
      CHECK(is_connected(g));
      const auto gi = girth(g);
      if (gi) CHECK(*gi >= 4);
      // Outerplanar graphs have at most 2n - 3 edges.
      CHECK(g.size() <= 2 * g.order() - 3);
    }
    CHECK_THROWS_AS(random_outerplanar_girth4(rng, 3), std::invalid_argument);
  }
}
