#include "criteria.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <sstream>

#include <unistd.h>

#include "../support/oracles.hpp"
#include "signhom/campaign.hpp"
#include "signhom/homsearch.hpp"
#include "signhom/iso.hpp"
#include "signhom/props.hpp"
#include "signhom/targets.hpp"
#include "signhom/witnesses.hpp"

namespace signhom::acceptance {

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      else detail.str("");
      ok = false;
      detail << "FAILED " << what;
    }
  }
};

Outcome c1_table1() {
  Outcome o;
  const auto rows = table1_scan();
  const auto& golden = table1_golden();
  o.require(rows.size() == golden.size(), "row count " + std::to_string(rows.size()));
  for (std::size_t i = 0; i < std::min(rows.size(), golden.size()); ++i)
    o.require(rows[i].text == golden[i], "row " + std::to_string(i + 1) + ": " + rows[i].text);
  const int common = max_common_successors(rows);
  o.require(common < 3, "two rows share 3 successors");
  if (o.ok) o.detail << rows.size() << " rows exact, max shared successors " << common;
  return o;
}

Outcome c2_property_values() {
  Outcome o;
  struct Instance {
    std::string family;
    std::string name;
    SignifiedGraph h;
    int n, k;
  };
  std::vector<Instance> list;
  for (int q : {5, 9, 25}) {
    const auto sp = build_sp(q).graph;
    const auto tr = build_tromp(q).graph;
    list.push_back({"SP", "SP" + std::to_string(q), sp, 1, (q - 1) / 2});
    list.push_back({"SP", "SP" + std::to_string(q), sp, 2, (q - 5) / 4});
    list.push_back({"Tr", "Tr(SP" + std::to_string(q) + ")", tr, 1, q});
    list.push_back({"Tr", "Tr(SP" + std::to_string(q) + ")", tr, 2, (q - 1) / 2});
    list.push_back({"Tr", "Tr(SP" + std::to_string(q) + ")", tr, 3, (q - 5) / 4});
  }
  const auto at = build_at(build_sp(25)).graph;
  list.push_back({"AT", "AT(SP25)", at, 1, 24});
  list.push_back({"AT", "AT(SP25)", at, 2, 11});
  list.push_back({"AT", "AT(SP25)", at, 3, 4});
  std::map<std::string, int> tight;
  for (const auto& in : list) {
    const auto r = check_property(in.h, in.n, in.k);
    const std::string tag = in.name + " P(" + std::to_string(in.n) + "," + std::to_string(in.k) + ")";
    o.require(r.holds, tag);
    if (r.holds && !check_property(in.h, in.n, in.k + 1).holds) ++tight[in.family];
  }
  for (const char* fam : {"SP", "Tr", "AT"}) o.require(tight[fam] > 0, std::string("no tight instance for ") + fam);
  if (o.ok)
    o.detail << list.size() << " instances hold; tight: SP " << tight["SP"] << ", Tr " << tight["Tr"] << ", AT "
             << tight["AT"];
  return o;
}

Outcome c3_srg() {
  Outcome o;
  for (int q : {5, 9, 13, 25}) {
    const auto p = srg_parameters(build_sp(q).graph, Sign::positive);
    const SrgParameters want{q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4};
    o.require(p && *p == want, "SP" + std::to_string(q));
  }
  if (o.ok) o.detail << "q = 5, 9, 13, 25";
  return o;
}

Outcome c4_symmetry() {
  Outcome o;
  for (int q : {5, 9}) {
    const std::string tag = "Tr(SP" + std::to_string(q) + ")";
    const auto h = build_tromp(q).graph;
    const auto gens = tromp_generators(q);
    for (const auto& g : gens) o.require(verify_automorphism(h, g.map), tag + " " + g.name);
    const Field f(q);
    FieldElem nonsquare = f.one();
    for (const auto& x : f.elements())
      if (x != f.zero() && !f.is_nonzero_square(x)) {
        nonsquare = x;
        break;
      }
    const auto gn = tromp_gamma_n(q, nonsquare);
    o.require(verify_anti_automorphism(h, gn), tag + " gamma_n");
    o.require(verify_automorphism(h, compose(gn, gn)), tag + " gamma_n twice");
    if (!o.ok) continue;
    const auto orbits = orbit_closure(h, gens);
    o.require(orbits.vertex_orbits.size() == 1, tag + " vertex orbits");
    std::set<std::array<Sign, 3>> patterns;
    for (const auto& t : orbits.triangle_orbits) {
      o.require(t.patterns.size() == 1, tag + " orbit mixes sign patterns");
      patterns.insert(t.patterns.front());
    }
    o.require(patterns.size() == orbits.triangle_orbits.size() && patterns.size() == 8, tag + " triangle orbits");
    if (o.ok && q == 9) o.detail << "Tr(SP9): " << orbits.triangle_orbits.size() << " triangle orbits = 8 patterns";
  }
  return o;
}

Outcome c5_paths() {
  Outcome o;
  const auto h = build_at(build_k4star()).graph;
  o.require(path_pattern_check(h, 3), "3-path patterns");
  for (Vertex v = 0; v < h.order(); ++v)
    o.require(h.degree(v, Sign::positive) > 0 && h.degree(v, Sign::negative) > 0, "vertex " + std::to_string(v));
  if (o.ok) o.detail << "all 8 patterns between all " << h.order() * h.order() << " pairs";
  return o;
}

Outcome c6_chain() {
  Outcome o;
  ChainOptions opt;
  opt.budget = std::chrono::minutes(10);
  const auto rep = verify_g_chain(opt);
  if (const auto* bad = rep.failing()) o.require(false, bad->name + " " + to_string(bad->status));
  o.require(rep.stages.size() == 7, "stage count");
  if (o.ok) o.detail << "7 stages pass";
  return o;
}

Outcome c7_catalog() {
  Outcome o;
  const auto cat = enumerate_4regular_9();
  o.require(cat.size() == 16, "catalog size " + std::to_string(cat.size()));
  const auto kept = matching_filter(cat);
  o.require(kept.size() == 1, "survivors " + std::to_string(kept.size()));
  if (kept.size() == 1) o.require(signified_iso(kept[0], build_sp(9).graph).has_value(), "survivor is not SP9");
  if (o.ok) o.detail << "16 graphs, 1 survivor, iso to SP9";
  return o;
}

Outcome c8_plus_shape() {
  Outcome o;
  const auto r = verify_plus_shape();
  o.require(r.clique, "clique");
  o.require(r.no_anti_twins, "anti-twins");
  o.require(r.at_isomorphic_to_tromp, "AT(SP9+) vs Tr(SP9)");
  o.require(build_at(build_plus(build_sp(9).graph)).graph.order() == 20, "order");
  if (o.ok) o.detail << "10-clique, no anti-twins, iso found";
  return o;
}

Outcome c9_zs() {
  Outcome o;
  for (int k = 2; k <= 5; ++k) {
    const auto zs = build_zs(k);
    const int n = zs.graph.order();
    o.require(n == k * (1 << (k - 1)), "order of ZS" + std::to_string(k));
    const auto pairing = anti_twin_pairing(zs.graph);
    o.require(pairing.has_value(), "ZS" + std::to_string(k) + " not anti-twinned");
    if (!pairing) continue;
    for (Vertex u = 0; u < n; ++u) {
      auto neg = zs.labels[u].zs_alpha;
      for (int& a : neg) a = -a;
      const auto& partner = zs.labels[(*pairing)[u]];
      o.require(partner.zs_class == zs.labels[u].zs_class && partner.zs_alpha == neg,
                "atw of " + zs.labels[u].text + " is " + partner.text);
    }
  }
  o.require(build_zs(5).graph.order() == 80, "|V(ZS5)|");
  if (o.ok) o.detail << "k = 2..5, |V(ZS5)| = 80";
  return o;
}

Outcome c10_signed_vs_brute(std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed);
  std::vector<SignifiedGraph> targets;
  while (targets.size() < 20) {
    const int n = 1 + static_cast<int>(rng() % 5);
    targets.push_back(oracle::random_graph(rng, n, 0.7));
  }
  int checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& base : oracle::connected_graphs_up_to_iso(n)) {
      for (int s = 0; s < 50; ++s) {
        SignifiedGraph g(n);
        for (const auto& e : base.edges()) g.set_edge(e.u, e.v, rng() & 1 ? Sign::negative : Sign::positive);
        for (const auto& h : targets) {
          const auto r = find_signed_hom(g, h);
          const bool want = oracle::signed_hom_exists(g, h);
          const bool got = r.status == SearchStatus::found;
          o.require(got == want && r.status != SearchStatus::indeterminate, "disagreement on n=" + std::to_string(n));
          if (got) o.require(is_valid_hom(resign(g, r.resign_set), h, r.map), "invalid fold");
          ++checked;
          if (!o.ok) return o;
        }
      }
    }
  o.detail << checked << " (G, H) pairs agree";
  return o;
}

Outcome c11_campaign(const std::string& fixtures) {
  Outcome o;
  const auto target = build_tromp(9);
  CampaignConfig cfg;
  cfg.search.order = VariableOrder::max_constrained;
  cfg.search.symmetry = true;
  std::ostringstream summary;
  for (const auto& [file, classes] : {std::pair{"octahedron.pc", std::uint64_t{1} << 7},
                                      std::pair{"icosahedron.pc", std::uint64_t{1} << 19}}) {
    const auto graphs = read_planar_code_file(fixtures + "/" + file);
    o.require(graphs.size() == 1 && validate_triangulation(graphs[0]), std::string(file) + " triangulation");
    if (!o.ok) return o;
    const auto full = run_campaign(graphs, target, cfg);
    const auto& r = full.at(0);
    o.require(r.complete() && r.classes_total == classes, std::string(file) + " classes");
    o.require(r.failures.empty() && r.undecided.empty(), std::string(file) + " failures");
    o.require(r.consistency_checked > 0 && r.consistency_mismatches == 0, std::string(file) + " consistency");
    summary << file << " " << r.classes_total << " classes 0 failures; ";

    // Interrupt part-way through, resume from the checkpoint, compare.
    const auto path = (std::filesystem::temp_directory_path() /
                       ("signhom-accept-" + std::to_string(::getpid()) + "-" + file + ".ckpt"))
                          .string();
    std::filesystem::remove(path);
    CampaignConfig part = cfg;
    part.checkpoint_path = path;
    part.checkpoint_every = classes / 8;
    part.stop_after = classes / 8 * 3 + 1;
    const auto first = run_campaign(graphs, target, part);
    o.require(!first.at(0).complete(), std::string(file) + " interruption");
    part.stop_after.reset();
    const auto resumed = run_campaign(graphs, target, part);
    std::filesystem::remove(path);
    auto strip = [](nlohmann::json j) {
      j.erase("elapsed_seconds");
      return j;
    };
    o.require(strip(report_to_json(resumed.at(0))) == strip(report_to_json(r)), std::string(file) + " resume differs");
  }
  if (o.ok) o.detail << summary.str() << "resume identical";
  return o;
}

Outcome c12_even_cycles() {
  Outcome o;
  for (int len : {4, 6}) {
    SignifiedGraph c(len);
    for (Vertex v = 0; v < len; ++v) c.set_edge(v, (v + 1) % len, v == 0 ? Sign::negative : Sign::positive);
    const auto r = chis_exact(c);
    o.require(r.exhausted && r.value == 4, "C" + std::to_string(len) + " gives " + std::to_string(r.value));
  }
  if (o.ok) o.detail << "chi_s = 4 for C4 and C6, exhausted";
  return o;
}

Outcome c13_outerplanar(std::uint64_t seed) {
  Outcome o;
  std::mt19937_64 rng(seed + 13);
  const auto k4 = build_k4star();
  const auto at = build_at(k4).graph;
  for (int i = 0; i < 20; ++i) {
    const auto g = random_outerplanar_girth4(rng, 12 + static_cast<int>(rng() % 20));
    const std::string tag = "instance " + std::to_string(i);
    const auto gi = girth(g);
    o.require(!gi || *gi >= 4, tag + " girth");
    const auto h = find_signified_hom(g, at);
    o.require(h.status == SearchStatus::found && is_valid_hom(g, at, h.map), tag + " -> AT(K4*)");
    const auto s = find_signed_hom(g, k4);
    o.require(s.status == SearchStatus::found && is_valid_hom(resign(g, s.resign_set), k4, s.map), tag + " -> K4*");
  }
  o.require(k4.order() == 4 && 2 * k4.order() <= 8, "|V(K4*)|");
  if (o.ok) o.detail << "20 instances map to AT(K4*) and fold onto K4*";
  return o;
}

struct Spec {
  int id;
  const char* title;
  double budget;
  std::function<Outcome(const Options&)> run;
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> list{
      {1, "AT(SP25) four-successor table", 5, [](const Options&) { return c1_table1(); }},
      {2, "P(n,k) values, exhaustive and tight", 60, [](const Options&) { return c2_property_values(); }},
      {3, "strong regularity of SP_q", 5, [](const Options&) { return c3_srg(); }},
      {4, "automorphisms, anti-automorphism, orbits", 120, [](const Options&) { return c4_symmetry(); }},
      {5, "signed 3-path patterns in AT(K4*)", 1, [](const Options&) { return c5_paths(); }},
      {6, "G1..G5 chromatic chain", 600, [](const Options&) { return c6_chain(); }},
      {7, "4-regular catalogue and matching filter", 60, [](const Options&) { return c7_catalog(); }},
      {8, "SP9+ shape and AT(SP9+) = Tr(SP9)", 10, [](const Options&) { return c8_plus_shape(); }},
      {9, "ZS_k anti-twinned", 5, [](const Options&) { return c9_zs(); }},
      {10, "signed search vs brute force", 600, [](const Options& o) { return c10_signed_vs_brute(o.seed); }},
      {11, "octahedron and icosahedron campaign", 7200, [](const Options& o) { return c11_campaign(o.fixtures); }},
      {12, "chi_s of even cycles with one negative edge", 60, [](const Options&) { return c12_even_cycles(); }},
      {13, "outerplanar girth 4 into AT(K4*)", 60, [](const Options& o) { return c13_outerplanar(o.seed); }},
  };
  return list;
}

}  // namespace

std::vector<Criterion> run(const Options& options, const std::function<void(const Criterion&)>& on_result) {
  std::vector<Criterion> out;
  for (const auto& s : specs()) {
    if (!options.only.empty() && !options.only.count(s.id)) continue;
    Criterion c{s.id, s.title, false, "", 0, s.budget};
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = s.run(options);
      c.check_passed = o.ok;
      c.detail = o.detail.str();
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(c);
    out.push_back(std::move(c));
  }
  return out;
}

std::string format_line(const Criterion& c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s %2d  (%.2f s / %.0f s)  ", c.passed() ? "PASS" : "FAIL", c.id, c.seconds,
                c.budget_seconds);
  return std::string(buf) + c.title + ": " + c.detail;
}

}  // namespace signhom::acceptance
