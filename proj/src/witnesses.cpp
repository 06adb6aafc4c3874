#include "signhom/witnesses.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "signhom/io.hpp"
#include "signhom/iso.hpp"
#include "signhom/targets.hpp"

namespace signhom {

SignifiedGraph glue(const GlueRecipe& recipe) {
  int n = recipe.base.order();
  for (const auto& a : recipe.attachments) {
    if (a.base_vertex < 0 || a.base_vertex >= recipe.base.order() || a.copy_vertex < 0 ||
        a.copy_vertex >= a.copy.order())
      throw std::invalid_argument("glue: identified vertex does not exist");
    n += a.copy.order() - 1;
  }
  SignifiedGraph out(n);
  for (const auto& e : recipe.base.edges()) out.set_edge(e.u, e.v, e.sign);
  for (std::size_t i = 0; i < recipe.attachments.size(); ++i) {
    const auto place = attachment_vertices(recipe, i);
    for (const auto& e : recipe.attachments[i].copy.edges()) out.set_edge(place[e.u], place[e.v], e.sign);
  }
  return out;
}

std::vector<Vertex> attachment_vertices(const GlueRecipe& recipe, std::size_t i) {
  Vertex next = recipe.base.order();
  for (std::size_t j = 0; j < i; ++j) next += recipe.attachments[j].copy.order() - 1;
  const auto& a = recipe.attachments.at(i);
  std::vector<Vertex> place(a.copy.order());
  for (Vertex v = 0; v < a.copy.order(); ++v) place[v] = v == a.copy_vertex ? a.base_vertex : next++;
  return place;
}

namespace {

SignifiedGraph signed_path(std::initializer_list<int> negative_edges) {
  SignifiedGraph g(6);
  for (Vertex v = 0; v + 1 < 6; ++v) g.set_edge(v, v + 1, Sign::positive);
  for (int u : negative_edges) g.set_edge(u, u + 1, Sign::negative);
  return g;
}

// a, b joined through a new apex positive to a and negative to b.
SignifiedGraph apex_join(const SignifiedGraph& a, const SignifiedGraph& b) {
  SignifiedGraph g = disjoint_union(a, b);
  SignifiedGraph out(g.order() + 1);
  for (const auto& e : g.edges()) out.set_edge(e.u, e.v, e.sign);
  const Vertex apex = g.order();
  for (Vertex v = 0; v < a.order(); ++v) out.set_edge(apex, v, Sign::positive);
  for (Vertex v = a.order(); v < g.order(); ++v) out.set_edge(apex, v, Sign::negative);
  return out;
}

SignifiedGraph g1() { return signed_path({1, 3}); }
SignifiedGraph g2() { return signed_path({0, 2, 4}); }
SignifiedGraph g3() { return apex_join(g1(), g2()); }
SignifiedGraph g4() { return apex_join(g3(), g3()); }

constexpr Vertex g3_apex = 12;
constexpr Vertex g4_apex = 26;

GlueRecipe glue_everywhere(const SignifiedGraph& g, Vertex at) {
  GlueRecipe r{g, {}};
  for (Vertex x = 0; x < g.order(); ++x) r.attachments.push_back({x, g, at});
  return r;
}

}  // namespace

const std::vector<std::string>& witness_names() {
  static const std::vector<std::string> names{"G1", "G2", "G3", "G4", "G5", "G4prime", "G5prime"};
  return names;
}

GlueRecipe witness_recipe(const std::string& name) {
  if (name == "G1") return {g1(), {}};
  if (name == "G2") return {g2(), {}};
  if (name == "G3") return {g3(), {}};
  if (name == "G4") return {g4(), {}};
  if (name == "G5") return glue_everywhere(g4(), g4_apex);
  if (name == "G4prime") return glue_everywhere(g3(), g3_apex);
  if (name == "G5prime") return {build_plus(glue(glue_everywhere(g3(), g3_apex))), {}};
  throw std::invalid_argument("unknown witness " + name);
}

SignifiedGraph build_witness(const std::string& name) { return glue(witness_recipe(name)); }

const char* to_string(StageStatus s) {
  switch (s) {
    case StageStatus::pass: return "pass";
    case StageStatus::fail: return "fail";
    case StageStatus::indeterminate: return "indeterminate";
  }
  return "?";
}

bool ChainReport::passed() const { return failing() == nullptr; }

const StageReport* ChainReport::failing() const {
  for (const auto& s : stages)
    if (s.status != StageStatus::pass) return &s;
  return nullptr;
}

bool regular_parity_obstruction(int n, int k) { return (static_cast<long long>(n) * k) % 2 != 0; }

namespace {

StageReport chi2_stage(const std::string& name, const SignifiedGraph& g, int expected, const ChainOptions& options) {
  SearchConfig cfg;
  cfg.time_limit = options.budget;
  cfg.order = VariableOrder::max_constrained;
  const auto r = chi2_exact(g, cfg);
  StageReport s{name, StageStatus::fail, {}};
  s.certificate = {{"value", r.value},         {"exhausted", r.exhausted}, {"lower_bound", r.lower_bound},
                   {"nodes", r.nodes},         {"expected", expected},     {"colouring", r.witness_map},
                   {"target", graph_to_json(r.witness_target)}};
  if (!r.exhausted)
    s.status = r.value == 0 || r.value >= expected ? StageStatus::indeterminate : StageStatus::fail;
  else
    s.status = r.value == expected ? StageStatus::pass : StageStatus::fail;
  return s;
}

bool is_valid_colouring(const SignifiedGraph& g, std::span<const Vertex> colours, int k) {
  try {
    const SignifiedGraph q = quotient_graph(g, colours, k);
    return is_valid_hom(g, q, colours);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

// Checks that `apex` is positive to every vertex of `plus` and negative to
// every vertex of `minus`, and that both induce `part`.
bool apex_structure(const SignifiedGraph& g, Vertex apex, const std::vector<Vertex>& plus,
                    const std::vector<Vertex>& minus, const SignifiedGraph& part) {
  for (Vertex v : plus)
    if (g.sign(apex, v) != Sign::positive) return false;
  for (Vertex v : minus)
    if (g.sign(apex, v) != Sign::negative) return false;
  return g.induced(plus) == part && g.induced(minus) == part;
}

std::vector<Vertex> range(Vertex first, Vertex last) {
  std::vector<Vertex> r(last - first);
  std::iota(r.begin(), r.end(), first);
  return r;
}

}  // namespace

ChainReport verify_g_chain(const ChainOptions& options) {
  ChainReport rep;
  auto stop = [&] { return rep.stages.back().status != StageStatus::pass; };

  rep.stages.push_back(chi2_stage("chi2(G1) = 4", g1(), 4, options));
  if (stop()) return rep;
  rep.stages.push_back(chi2_stage("chi2(G2) = 4", g2(), 4, options));
  if (stop()) return rep;
  rep.stages.push_back(chi2_stage("chi2(G3) = 9", g3(), 9, options));
  if (stop()) return rep;

  // Upper bound for G4 from an explicit 19-colouring.
  const SignifiedGraph G4 = g4();
  SearchConfig cfg;
  cfg.time_limit = options.budget;
  cfg.order = VariableOrder::max_constrained;
  const auto col = signified_colouring(G4, 19, cfg);
  {
    StageReport s{"chi2(G4) <= 19", StageStatus::fail, {}};
    s.certificate = {{"status", to_string(col.status)}, {"nodes", col.nodes}, {"colouring", col.colours}};
    if (col.status == SearchStatus::found)
      s.status = is_valid_colouring(G4, col.colours, 19) ? StageStatus::pass : StageStatus::fail;
    else if (col.status == SearchStatus::indeterminate)
      s.status = StageStatus::indeterminate;
    rep.stages.push_back(std::move(s));
    if (stop()) return rep;
  }
  {
    // The colour sets of the two G3 copies and of v are pairwise disjoint.
    std::set<Vertex> first, second;
    for (Vertex v = 0; v < 13; ++v) first.insert(col.colours[v]);
    for (Vertex v = 13; v < 26; ++v) second.insert(col.colours[v]);
    const Vertex apex = col.colours[g4_apex];
    std::vector<Vertex> shared;
    std::set_intersection(first.begin(), first.end(), second.begin(), second.end(), std::back_inserter(shared));
    StageReport s{"G4 colouring disjointness", StageStatus::fail, {}};
    s.certificate = {{"copy1_colours", first}, {"copy2_colours", second}, {"apex_colour", apex}, {"shared", shared}};
    if (shared.empty() && !first.count(apex) && !second.count(apex)) s.status = StageStatus::pass;
    rep.stages.push_back(std::move(s));
    if (stop()) return rep;
  }
  {
    // A colour used in both copies would carry a positive and a negative
    // edge to v's colour; v's colour is adjacent to everything. So any
    // colouring uses chi2(G3) + chi2(G3) + 1 colours.
    StageReport s{"chi2(G4) >= 19", StageStatus::fail, {}};
    const bool structure = apex_structure(G4, g4_apex, range(0, 13), range(13, 26), g3());
    const int bound = 9 + 9 + 1;
    s.certificate = {{"apex_structure", structure}, {"chi2_G3", 9}, {"bound", bound}};
    if (structure) s.status = StageStatus::pass;
    if (options.raw_g4_refutation) {
      const auto raw = signified_colouring(G4, 18, cfg);
      s.certificate["raw_18"] = to_string(raw.status);
      if (raw.status == SearchStatus::found) s.status = StageStatus::fail;
      if (raw.status == SearchStatus::indeterminate && s.status == StageStatus::pass)
        s.status = StageStatus::indeterminate;
    }
    rep.stages.push_back(std::move(s));
    if (stop()) return rep;
  }
  {
    // In a 19-colouring of G5 the base G4 uses all 19 colours, and the G4
    // glued by its apex at any vertex x forces x's colour to have exactly 9
    // positive and 9 negative neighbour colours. The positive part of the
    // target would be 9-regular on 19 vertices.
    StageReport s{"chi2(G5) >= 20", StageStatus::fail, {}};
    const GlueRecipe recipe = witness_recipe("G5");
    const SignifiedGraph G5 = glue(recipe);
    bool glued = G5.induced(range(0, 27)) == G4 && recipe.attachments.size() == 27;
    for (std::size_t i = 0; i < recipe.attachments.size() && glued; ++i) {
      const auto place = attachment_vertices(recipe, i);
      glued = place[g4_apex] == static_cast<Vertex>(i) && G5.induced(place) == G4;
    }
    const bool parity = regular_parity_obstruction(19, 9);
    s.certificate = {{"vertices", G5.order()}, {"every_vertex_glued", glued}, {"n", 19}, {"k", 9}, {"n_times_k", 171},
                     {"odd", parity}};
    if (glued && parity) s.status = StageStatus::pass;
    rep.stages.push_back(std::move(s));
  }
  return rep;
}

ChainReport verify_g4prime(const ChainOptions& options) {
  ChainReport rep;
  const GlueRecipe recipe = witness_recipe("G4prime");
  const SignifiedGraph g = glue(recipe);
  {
    StageReport s{"G3 subgraph of G4prime", StageStatus::fail, {}};
    const bool contains = g.induced(range(0, 13)) == g3();
    s.certificate = {{"vertices", g.order()}, {"copies", 1 + recipe.attachments.size()}, {"contains_G3", contains}};
    if (contains) s.status = StageStatus::pass;
    rep.stages.push_back(std::move(s));
  }
  {
    StageReport s{"G4prime -> SP9", StageStatus::fail, {}};
    SearchConfig cfg;
    cfg.time_limit = options.budget;
    cfg.symmetry = true;
    const auto r = find_signified_hom(g, build_sp(9), cfg);
    s.certificate = {{"status", to_string(r.status)}, {"nodes", r.nodes}, {"map", r.map}};
    if (r.status == SearchStatus::found)
      s.status = is_valid_hom(g, build_sp(9).graph, r.map) ? StageStatus::pass : StageStatus::fail;
    else if (r.status == SearchStatus::indeterminate)
      s.status = StageStatus::indeterminate;
    rep.stages.push_back(std::move(s));
  }
  return rep;
}

namespace {

using Adj = std::array<std::uint16_t, 9>;

SignifiedGraph from_adj(const Adj& adj, bool complete) {
  SignifiedGraph g(9);
  for (Vertex u = 0; u < 9; ++u)
    for (Vertex v = u + 1; v < 9; ++v) {
      if ((adj[u] >> v) & 1)
        g.set_edge(u, v, Sign::positive);
      else if (complete)
        g.set_edge(u, v, Sign::negative);
    }
  return g;
}

bool adj_connected(const Adj& adj) {
  std::uint16_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint16_t next = 0;
    for (int v = 0; v < 9; ++v)
      if ((frontier >> v) & 1) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == 0x1ff;
}

// Completes vertices i..8 to degree 4 using only edges to later vertices.
void complete_regular(Adj& adj, std::array<int, 9>& deg, int i, std::map<std::string, Adj>& found) {
  if (i == 9) {
    if (!adj_connected(adj)) return;
    found.emplace(canonical_form(from_adj(adj, false)).code, adj);
    return;
  }
  const int need = 4 - deg[i];
  std::vector<int> cand;
  for (int j = i + 1; j < 9; ++j)
    if (deg[j] < 4 && !((adj[i] >> j) & 1)) cand.push_back(j);
  if (need < 0 || need > static_cast<int>(cand.size())) return;
  std::vector<bool> pick(cand.size(), false);
  std::fill(pick.begin(), pick.begin() + need, true);
  do {
    for (std::size_t t = 0; t < cand.size(); ++t)
      if (pick[t]) {
        adj[i] |= 1u << cand[t];
        adj[cand[t]] |= 1u << i;
        ++deg[i];
        ++deg[cand[t]];
      }
    complete_regular(adj, deg, i + 1, found);
    for (std::size_t t = 0; t < cand.size(); ++t)
      if (pick[t]) {
        adj[i] &= ~(1u << cand[t]);
        adj[cand[t]] &= ~(1u << i);
        --deg[i];
        --deg[cand[t]];
      }
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace

std::vector<SignifiedGraph> enumerate_4regular_9(Exec exec) {
  // Up to relabelling N(0) = {1, 2, 3, 4}. The branches are the choices of
  // vertex 1's remaining three neighbours among 2..8.
  Adj root{};
  std::array<int, 9> deg{};
  for (int v = 1; v <= 4; ++v) {
    root[0] |= 1u << v;
    root[v] |= 1u;
    ++deg[v];
  }
  deg[0] = 4;
  std::vector<std::array<int, 3>> branches;
  for (int a = 2; a <= 8; ++a)
    for (int b = a + 1; b <= 8; ++b)
      for (int c = b + 1; c <= 8; ++c) branches.push_back({a, b, c});

  std::vector<std::map<std::string, Adj>> found(branches.size());
  const int count = static_cast<int>(branches.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int t = 0; t < count; ++t) {
    Adj adj = root;
    auto d = deg;
    for (int w : branches[t]) {
      adj[1] |= 1u << w;
      adj[w] |= 1u << 1;
      ++d[1];
      ++d[w];
    }
    complete_regular(adj, d, 2, found[t]);
  }
  std::map<std::string, Adj> all;
  for (auto& f : found) all.insert(f.begin(), f.end());
  std::vector<SignifiedGraph> out;
  for (const auto& [code, adj] : all) out.push_back(from_adj(adj, true));
  return out;
}

namespace {

bool has_perfect_matching_4(const SignifiedGraph& g, const std::vector<Vertex>& p, Sign s) {
  return (g.sign(p[0], p[1]) == s && g.sign(p[2], p[3]) == s) || (g.sign(p[0], p[2]) == s && g.sign(p[1], p[3]) == s) ||
         (g.sign(p[0], p[3]) == s && g.sign(p[1], p[2]) == s);
}

}  // namespace

bool matching_condition(const SignifiedGraph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    const auto pos = g.neighbors(c, Sign::positive);
    const auto neg = g.neighbors(c, Sign::negative);
    if (pos.size() != 4 || neg.size() != 4) return false;
    if (!has_perfect_matching_4(g, pos, Sign::positive) || !has_perfect_matching_4(g, neg, Sign::negative))
      return false;
  }
  return true;
}

std::vector<SignifiedGraph> matching_filter(const std::vector<SignifiedGraph>& candidates) {
  std::vector<SignifiedGraph> out;
  for (const auto& g : candidates) {
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v, Sign::positive) != 4 || g.degree(v, Sign::negative) != 4)
        throw std::invalid_argument("matching_filter needs 4 positive and 4 negative neighbours everywhere");
    if (matching_condition(g)) out.push_back(g);
  }
  return out;
}

PlusShapeReport verify_plus_shape() {
  PlusShapeReport rep;
  const SignifiedGraph plus = build_plus(build_sp(9).graph);
  const int n = plus.order();
  rep.clique = plus.size() == n * (n - 1) / 2;
  rep.no_anti_twins = !anti_twin_pairing(plus).has_value();
  if (auto iso = signified_iso(build_at(plus).graph, build_tromp(9).graph)) {
    rep.at_isomorphic_to_tromp = true;
    rep.isomorphism = std::move(*iso);
  }
  return rep;
}

SignifiedGraph random_outerplanar_girth4(std::mt19937_64& rng, int vertices) {
  if (vertices < 4) throw std::invalid_argument("random_outerplanar_girth4 needs at least 4 vertices");
  std::vector<SignedEdge> edges;
  int n = 1;
  auto sign = [&] { return std::bernoulli_distribution(0.5)(rng) ? Sign::positive : Sign::negative; };
  auto pick = [&](int hi) { return std::uniform_int_distribution<int>(0, hi - 1)(rng); };

  auto grow_block = [&](Vertex anchor) {
    // Outer cycle of length 4..6, then ears of length 3..4 on outer edges.
    std::vector<Vertex> boundary{anchor};
    const int len = 4 + pick(3);
    for (int i = 1; i < len; ++i) boundary.push_back(n++);
    for (int i = 0; i < len; ++i) edges.push_back({boundary[i], boundary[(i + 1) % len], sign()});
    const int ears = pick(3);
    for (int e = 0; e < ears; ++e) {
      const int at = pick(static_cast<int>(boundary.size()));
      const int path = 3 + pick(2);
      Vertex prev = boundary[at];
      std::vector<Vertex> inner;
      for (int i = 1; i < path; ++i) {
        inner.push_back(n++);
        edges.push_back({prev, inner.back(), sign()});
        prev = inner.back();
      }
      edges.push_back({prev, boundary[(at + 1) % boundary.size()], sign()});
      boundary.insert(boundary.begin() + at + 1, inner.begin(), inner.end());
    }
  };

  grow_block(0);
  while (n < vertices) {
    const Vertex anchor = pick(n);
    if (pick(10) < 7)
      grow_block(anchor);
    else
      edges.push_back({anchor, n++, sign()});
  }
  SignifiedGraph g(n);
  for (const auto& e : edges) g.add_edge(e.u, e.v, e.sign);
  return g;
}

}  // namespace signhom
