#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "seed.hpp"
#include "signhom/props.hpp"
#include "signhom/targets.hpp"

using namespace signhom;

TEST_SUITE("targets") {
  TEST_CASE("orders and completeness") {
    for (int q : {5, 9, 13, 25}) {
      CAPTURE(q);
      const auto sp = build_sp(q);
      CHECK(sp.graph.order() == q);
      CHECK(sp.graph.size() == q * (q - 1) / 2);
      const auto tr = build_tromp(q);
      CHECK(tr.graph.order() == 2 * q + 2);
      CHECK(tr.symmetry == TargetSymmetry::triangle_transitive);
      // Closed-form signs agree with the composed construction.
      CHECK(tr.graph == build_at(build_plus(sp)).graph);
      CHECK(tr.label_texts() == build_at(build_plus(sp)).label_texts());
    }
    for (int k = 2; k <= 6; ++k) CHECK(build_zs(k).graph.order() == k * (1 << (k - 1)));
    CHECK_THROWS_AS(build_zs(1), std::invalid_argument);
    CHECK_THROWS_AS(build_sp(7), std::invalid_argument);
    CHECK(build_k4star().size() == 6);
    CHECK(build_k4star().degree(0, Sign::negative) == 1);
  }

  TEST_CASE("SP_q signs follow the quadratic character both ways") {
    for (int q : {5, 9, 13, 25}) {
      const Field f(q);
      const auto sp = build_sp(q).graph;
      for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
          if (i != j) CHECK(sp.sign(i, j) == sign_from_int(f.square_sign(f.sub(f.element(j), f.element(i)))));
    }
  }

  TEST_CASE("AT and plus") {
    auto rng = seeded_rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      const auto g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 6), 0.6);
      const int n = g.order();
      const auto at = build_at(g).graph;
      CHECK(at.order() == 2 * n);
      CHECK(at.size() == 4 * g.size());
      for (const auto& e : g.edges()) {
        CHECK(at.sign(e.u, e.v) == e.sign);
        CHECK(at.sign(e.u + n, e.v + n) == e.sign);
        CHECK(at.sign(e.u, e.v + n) == -e.sign);
      }
      const auto plus = build_plus(g);
      CHECK(plus.order() == n + 1);
      for (Vertex v = 0; v < n; ++v) CHECK(plus.sign(v, n) == Sign::positive);
    }
  }

  TEST_CASE("labels") {
    const auto at = build_at(build_sp(25));
    CHECK(at.labels[0].text == "0_0");
    CHECK(at.labels[25].text == "0_1");
    CHECK(at.find("(1+2√2)_1") == 25 + 11);
    CHECK(at.find("(3√2)_1") == 25 + 15);
    CHECK_THROWS_AS(at.find("nope"), std::invalid_argument);
    const auto tr = build_tromp(5);
    CHECK(tr.labels[5].text == "∞_0");
    CHECK(tr.labels[5].infinity);
    CHECK(tr.labels[11].text == "∞_1");
    const Field f(5);
    CHECK(tromp_vertex(f, std::nullopt, 1) == 11);
    CHECK(tromp_vertex(f, FieldElem{3, 0}, 1) == 9);
    CHECK(build_zs(3).labels[0].text == "(1;0,+,+)");
  }

  TEST_CASE("ZS_k product rule") {
    const auto zs = build_zs(4);
    for (Vertex x = 0; x < zs.graph.order(); ++x)
      for (Vertex y = 0; y < zs.graph.order(); ++y) {
        const auto& a = zs.labels[x];
        const auto& b = zs.labels[y];
        if (a.zs_class == b.zs_class) {
          CHECK_FALSE(zs.graph.adjacent(x, y));
          continue;
        }
        CHECK(to_int(zs.graph.sign(x, y)) == a.zs_alpha[b.zs_class - 1] * b.zs_alpha[a.zs_class - 1]);
      }
  }

  TEST_CASE("named targets") {
    CHECK(build_named_target("k4star").graph.order() == 4);
    CHECK(build_named_target("at-k4star").graph.order() == 8);
    CHECK(build_named_target("zs-5").graph.order() == 80);
    CHECK(build_named_target("sp-13").graph.order() == 13);
    CHECK(build_named_target("sp-9-plus").graph.order() == 10);
    CHECK(build_named_target("at-sp-25").graph.order() == 50);
    CHECK(build_named_target("tromp-9").graph.order() == 20);
    CHECK(build_named_target("tromp9").graph == build_tromp(9).graph);
    for (const char* bad : {"", "sp-", "sp-x", "tromp-7", "zs-1", "foo", "sp-5x"})
      CHECK_THROWS_AS(build_named_target(bad), std::invalid_argument);
  }
}
