#include "signhom/props.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <omp.h>

#include "signhom/homsearch.hpp"

namespace signhom {

SignVector SignVector::conjugate() const {
  SignVector out = *this;
  for (auto& s : out.entries) s = -s;
  return out;
}

std::string SignVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    s += entries[i] == Sign::positive ? "+1" : "-1";
    if (i + 1 < entries.size()) s += ",";
  }
  return s + ")";
}

std::vector<SignVector> SignVector::all(int k) {
  if (k < 0 || k > 20) throw std::invalid_argument("sign vector length out of range");
  std::vector<SignVector> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    SignVector v;
    for (int i = 0; i < k; ++i) v.entries.push_back((mask >> (k - 1 - i)) & 1 ? Sign::negative : Sign::positive);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

void require_clique(const SignifiedGraph& h, std::span<const Vertex> x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] >= h.order()) throw std::invalid_argument("sequence vertex out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (x[i] == x[j] || !h.adjacent(x[i], x[j])) throw std::invalid_argument("sequence does not induce a clique");
  }
}

}  // namespace

std::vector<Vertex> alpha_successors(const SignifiedGraph& h, std::span<const Vertex> x, const SignVector& alpha) {
  if (static_cast<int>(x.size()) != alpha.size()) throw std::invalid_argument("|X| != |alpha|");
  require_clique(h, x);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < h.order(); ++u) {
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i) ok = u != x[i] && h.sign(u, x[i]) == alpha.entries[i];
    if (ok) out.push_back(u);
  }
  return out;
}

namespace {

struct PartialReport {
  std::optional<int> min;
  std::optional<PropertyWitness> witness;
  std::uint64_t sequences = 0;
};

SignVector vector_from_index(int n, std::uint32_t index) {
  SignVector v;
  for (int i = 0; i < n; ++i) v.entries.push_back((index >> (n - 1 - i)) & 1 ? Sign::negative : Sign::positive);
  return v;
}

void record(PartialReport& r, std::span<const Vertex> x, std::uint32_t alpha_index, int count, int k) {
  if (!r.min || count < *r.min) r.min = count;
  if (count < k && !r.witness)
    r.witness = PropertyWitness{{x.begin(), x.end()}, vector_from_index(static_cast<int>(x.size()), alpha_index), count};
}

// Reference: every ordered n-tuple, every alpha, successors by full scan.
PartialReport property_reference(const SignifiedGraph& h, int n, int k) {
  PartialReport r;
  const int order = h.order();
  std::vector<Vertex> x(n, 0);
  const auto alphas = SignVector::all(n);
  std::function<void(int)> rec = [&](int d) {
    if (d == n) {
      ++r.sequences;
      for (std::uint32_t a = 0; a < alphas.size(); ++a) {
        int count = 0;
        for (Vertex u = 0; u < order; ++u) {
          bool ok = true;
          for (int i = 0; i < n && ok; ++i) ok = u != x[i] && h.sign(u, x[i]) == alphas[a].entries[i];
          count += ok;
        }
        record(r, x, a, count, k);
      }
      return;
    }
    for (Vertex v = 0; v < order; ++v) {
      bool ok = true;
      for (int i = 0; i < d && ok; ++i) ok = v != x[i] && h.adjacent(v, x[i]);
      if (!ok) continue;
      x[d] = v;
      rec(d + 1);
    }
  };
  rec(0);
  return r;
}

// Bitset kernel for the subtree with x[0] = first. Level d holds the 2^d
// successor sets of the current prefix, indexed by the alpha prefix bits.
PartialReport property_subtree(const CompiledTarget& t, int n, int k, Vertex first) {
  PartialReport r;
  const int words = t.words();
  const int order = t.order();
  std::vector<std::vector<std::uint64_t>> level(n + 1);
  std::vector<std::vector<std::uint64_t>> cliq(n + 1, std::vector<std::uint64_t>(words, 0));
  for (int d = 0; d <= n; ++d) level[d].assign((std::size_t{1} << d) * words, 0);
  std::fill(level[0].begin(), level[0].end(), ~std::uint64_t{0});
  if (order % 64) level[0][words - 1] = (std::uint64_t{1} << (order % 64)) - 1;
  std::vector<Vertex> x(n);

  auto extend = [&](int d, Vertex v) {
    // level[d+1][2j + b] = level[d][j] & row(v, b ? - : +)
    const std::uint64_t* pos = t.row(v, Sign::positive);
    const std::uint64_t* neg = t.row(v, Sign::negative);
    const std::size_t sets = std::size_t{1} << d;
    for (std::size_t j = 0; j < sets; ++j)
      for (int w = 0; w < words; ++w) {
        const std::uint64_t base = level[d][j * words + w];
        level[d + 1][(2 * j) * words + w] = base & pos[w];
        level[d + 1][(2 * j + 1) * words + w] = base & neg[w];
      }
    // Common neighbourhood of the prefix for the next clique vertex.
    for (int w = 0; w < words; ++w) cliq[d + 1][w] = (d == 0 ? ~std::uint64_t{0} : cliq[d][w]) & (pos[w] | neg[w]);
  };

  std::function<void(int)> rec = [&](int d) {
    if (d == n) {
      ++r.sequences;
      for (std::uint32_t a = 0; a < (1u << n); ++a) {
        int count = 0;
        for (int w = 0; w < words; ++w) count += std::popcount(level[n][a * words + w]);
        record(r, x, a, count, k);
      }
      return;
    }
    for (int w = 0; w < words; ++w)
      for (std::uint64_t bits = cliq[d][w]; bits; bits &= bits - 1) {
        const Vertex v = w * 64 + std::countr_zero(bits);
        x[d] = v;
        extend(d, v);
        rec(d + 1);
      }
  };
  x[0] = first;
  extend(0, first);
  rec(1);
  return r;
}

PropertyReport finish(int n, int k, const std::vector<PartialReport>& parts) {
  PropertyReport rep;
  rep.n = n;
  rep.k = k;
  for (const auto& p : parts) {
    rep.sequences += p.sequences;
    if (p.min && (!rep.min_successors || *p.min < *rep.min_successors)) rep.min_successors = p.min;
    if (p.witness && !rep.witness) rep.witness = p.witness;
  }
  rep.holds = !rep.witness.has_value();
  return rep;
}

}  // namespace

PropertyReport check_property(const SignifiedGraph& h, int n, int k, Exec exec) {
  if (n < 1) throw std::invalid_argument("check_property needs n >= 1");
  if (k < 0) throw std::invalid_argument("check_property needs k >= 0");
  if (n > 16) throw std::invalid_argument("check_property supports n <= 16");
  if (exec == Exec::serial) return finish(n, k, {property_reference(h, n, k)});

  const CompiledTarget t(h);
  std::vector<PartialReport> parts(h.order());
  const int order = h.order();
#pragma omp parallel for schedule(dynamic)
  for (int v = 0; v < order; ++v) parts[v] = property_subtree(t, n, k, v);
  return finish(n, k, parts);
}

namespace {

void require_permutation(const SignifiedGraph& h, std::span<const Vertex> sigma) {
  if (static_cast<int>(sigma.size()) != h.order()) throw std::invalid_argument("map has wrong length");
  std::vector<bool> seen(h.order(), false);
  for (Vertex v : sigma) {
    if (v < 0 || v >= h.order() || seen[v]) throw std::invalid_argument("map is not a bijection");
    seen[v] = true;
  }
}

}  // namespace

bool verify_automorphism(const SignifiedGraph& h, std::span<const Vertex> sigma) {
  require_permutation(h, sigma);
  for (Vertex u = 0; u < h.order(); ++u)
    for (Vertex v = u + 1; v < h.order(); ++v)
      if (h.sign(u, v) != h.sign(sigma[u], sigma[v])) return false;
  return true;
}

bool verify_anti_automorphism(const SignifiedGraph& h, std::span<const Vertex> rho) {
  require_permutation(h, rho);
  for (Vertex u = 0; u < h.order(); ++u)
    for (Vertex v = u + 1; v < h.order(); ++v)
      if (h.sign(u, v) != -h.sign(rho[u], rho[v])) return false;
  return true;
}

Mapping compose(std::span<const Vertex> outer, std::span<const Vertex> inner) {
  Mapping out(inner.size());
  for (std::size_t v = 0; v < inner.size(); ++v) out[v] = outer[inner[v]];
  return out;
}

namespace {

// Applies f(u, i) -> (u', i') to every finite vertex of the Tromp layout and
// g(i) -> (j, i') to the infinite ones.
template <class Finite, class Infinite>
Mapping tromp_map(const Field& f, Finite&& finite, Infinite&& infinite) {
  const int q = f.order();
  Mapping m(2 * q + 2);
  for (int i = 0; i < 2; ++i) {
    for (const auto& u : f.elements()) {
      const auto [img, copy] = finite(u, i);
      m[tromp_vertex(f, u, i)] = tromp_vertex(f, img, copy);
    }
    const auto [img, copy] = infinite(i);
    m[tromp_vertex(f, std::nullopt, i)] = tromp_vertex(f, img, copy);
  }
  return m;
}

using MaybeElem = std::optional<FieldElem>;

}  // namespace

Mapping tromp_gamma1(int q) {
  const Field f(q);
  return tromp_map(
      f, [](FieldElem u, int i) { return std::pair{MaybeElem(u), 1 - i}; },
      [](int i) { return std::pair{MaybeElem(), 1 - i}; });
}

Mapping tromp_gamma3(int q) {
  const Field f(q);
  return tromp_map(
      f,
      [&](FieldElem u, int i) {
        if (u == f.zero()) return std::pair{MaybeElem(), i};
        return std::pair{MaybeElem(f.inv(u)), f.is_nonzero_square(u) ? i : 1 - i};
      },
      [&](int i) { return std::pair{MaybeElem(f.zero()), i}; });
}

Mapping tromp_translation(int q, FieldElem b) {
  const Field f(q);
  return tromp_map(
      f, [&](FieldElem u, int i) { return std::pair{MaybeElem(f.add(u, b)), i}; },
      [](int i) { return std::pair{MaybeElem(), i}; });
}

Mapping tromp_scaling(int q, FieldElem a) {
  const Field f(q);
  if (!f.is_nonzero_square(a)) throw std::invalid_argument("scaling factor must be a non-zero square");
  return tromp_map(
      f, [&](FieldElem u, int i) { return std::pair{MaybeElem(f.mul(a, u)), i}; },
      [](int i) { return std::pair{MaybeElem(), i}; });
}

Mapping tromp_frobenius(int q) {
  const Field f(q);
  return tromp_map(
      f, [&](FieldElem u, int i) { return std::pair{MaybeElem(f.frobenius(u)), i}; },
      [](int i) { return std::pair{MaybeElem(), i}; });
}

Mapping tromp_gamma_n(int q, FieldElem n) {
  const Field f(q);
  if (n == f.zero() || f.square_sign(n) != -1) throw std::invalid_argument("gamma_n needs a non-square n");
  return tromp_map(
      f, [&](FieldElem u, int i) { return std::pair{MaybeElem(f.mul(n, u)), 1 - i}; },
      [](int i) { return std::pair{MaybeElem(), i}; });
}

std::vector<NamedMapping> tromp_generators(int q) {
  const Field f(q);
  std::vector<NamedMapping> out{{"gamma1", tromp_gamma1(q)}, {"gamma3", tromp_gamma3(q)}};
  for (const auto& b : f.elements()) out.push_back({"translate " + f.name(b), tromp_translation(q, b)});
  for (const auto& a : f.elements())
    if (f.is_nonzero_square(a)) out.push_back({"scale " + f.name(a), tromp_scaling(q, a)});
  out.push_back({"frobenius", tromp_frobenius(q)});
  return out;
}

Mapping sp_translation(int q, FieldElem b) {
  const Field f(q);
  Mapping m(q);
  for (const auto& u : f.elements()) m[f.index(u)] = f.index(f.add(u, b));
  return m;
}

Mapping sp_scaling(int q, FieldElem a) {
  const Field f(q);
  if (!f.is_nonzero_square(a)) throw std::invalid_argument("scaling factor must be a non-zero square");
  Mapping m(q);
  for (const auto& u : f.elements()) m[f.index(u)] = f.index(f.mul(a, u));
  return m;
}

Mapping sp_frobenius(int q) {
  const Field f(q);
  Mapping m(q);
  for (const auto& u : f.elements()) m[f.index(u)] = f.index(f.frobenius(u));
  return m;
}

std::vector<NamedMapping> sp_generators(int q) {
  const Field f(q);
  std::vector<NamedMapping> out;
  for (const auto& b : f.elements()) out.push_back({"translate " + f.name(b), sp_translation(q, b)});
  for (const auto& a : f.elements())
    if (f.is_nonzero_square(a)) out.push_back({"scale " + f.name(a), sp_scaling(q, a)});
  out.push_back({"frobenius", sp_frobenius(q)});
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

OrbitReport orbit_closure(const SignifiedGraph& h, const std::vector<NamedMapping>& generators) {
  for (const auto& g : generators)
    if (!verify_automorphism(h, g.map)) throw std::invalid_argument("generator " + g.name + " is not an automorphism");
  const int n = h.order();
  if (n > 200) throw std::invalid_argument("orbit_closure supports up to 200 vertices");
  OrbitReport rep;

  UnionFind vuf(n);
  for (const auto& g : generators)
    for (Vertex v = 0; v < n; ++v) vuf.unite(v, g.map[v]);
  std::map<int, std::vector<Vertex>> vorb;
  for (Vertex v = 0; v < n; ++v) vorb[vuf.find(v)].push_back(v);
  for (auto& [root, members] : vorb) rep.vertex_orbits.push_back(std::move(members));

  const auto edges = h.edges();
  std::map<std::pair<Vertex, Vertex>, int> edge_id;
  for (std::size_t i = 0; i < edges.size(); ++i) edge_id[{edges[i].u, edges[i].v}] = static_cast<int>(i);
  UnionFind euf(edges.size());
  for (const auto& g : generators)
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Vertex a = g.map[edges[i].u], b = g.map[edges[i].v];
      euf.unite(static_cast<int>(i), edge_id.at({std::min(a, b), std::max(a, b)}));
    }
  std::map<int, EdgeOrbit> eorb;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& o = eorb[euf.find(static_cast<int>(i))];
    if (o.size++ == 0) o.representative = edges[i];
    if (std::find(o.signs.begin(), o.signs.end(), edges[i].sign) == o.signs.end()) o.signs.push_back(edges[i].sign);
  }
  for (auto& [root, o] : eorb) rep.edge_orbits.push_back(std::move(o));

  // Ordered triangles, densely indexed by a*n*n + b*n + c.
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<int> tri_id(nn * nn * nn, -1);
  std::vector<std::array<Vertex, 3>> tris;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b) {
      if (!h.adjacent(a, b)) continue;
      for (Vertex c = 0; c < n; ++c)
        if (h.adjacent(a, c) && h.adjacent(b, c)) {
          tri_id[(a * nn + b) * nn + c] = static_cast<int>(tris.size());
          tris.push_back({a, b, c});
        }
    }
  UnionFind tuf(tris.size());
  for (const auto& g : generators)
    for (std::size_t i = 0; i < tris.size(); ++i) {
      const auto& t = tris[i];
      tuf.unite(static_cast<int>(i), tri_id[(g.map[t[0]] * nn + g.map[t[1]]) * nn + g.map[t[2]]]);
    }
  std::map<int, TriangleOrbit> torb;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const auto& t = tris[i];
    auto& o = torb[tuf.find(static_cast<int>(i))];
    if (o.size++ == 0) o.representative = t;
    const std::array<Sign, 3> pattern{h.sign(t[0], t[1]), h.sign(t[0], t[2]), h.sign(t[1], t[2])};
    if (std::find(o.patterns.begin(), o.patterns.end(), pattern) == o.patterns.end()) o.patterns.push_back(pattern);
  }
  for (auto& [root, o] : torb) rep.triangle_orbits.push_back(std::move(o));
  return rep;
}

std::vector<Table1Row> table1_scan() {
  const Field f(25);
  const LabelledTarget at = build_at(build_sp(25));
  const SignVector alpha{{Sign::positive, Sign::positive, Sign::positive}};
  const Vertex zero = at_sp_vertex(f, f.zero(), 0);
  const Vertex one = at_sp_vertex(f, f.one(), 0);
  std::vector<Table1Row> rows;
  for (const auto& x : f.elements()) {
    if (x == f.zero() || x == f.one()) continue;
    const Vertex xv = at_sp_vertex(f, x, 0);
    const std::array<Vertex, 3> triple{zero, one, xv};
    auto succ = alpha_successors(at.graph, triple, alpha);
    if (succ.size() != 4) continue;
    Table1Row row{triple, succ, "(" + at.labels[zero].text + "," + at.labels[one].text + "," + at.labels[xv].text + ")"};
    for (Vertex s : succ) row.text += " " + at.labels[s].text;
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<std::string>& table1_golden() {
  static const std::vector<std::string> rows{
      "(0_0,1_0,2_0) 3_0 4_0 (1+2√2)_1 (1+3√2)_1",
      "(0_0,1_0,3_0) 2_0 4_0 (3+√2)_1 (3+4√2)_1",
      "(0_0,1_0,4_0) 2_0 3_0 (2√2)_1 (3√2)_1",
      "(0_0,1_0,(3+2√2)_0) (3+√2)_1 (3√2)_1 (1+3√2)_1 (3+4√2)_1",
      "(0_0,1_0,(3+3√2)_0) (3+√2)_1 (2√2)_1 (1+2√2)_1 (3+4√2)_1",
  };
  return rows;
}

int max_common_successors(const std::vector<Table1Row>& rows) {
  int best = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      std::vector<Vertex> common;
      std::set_intersection(rows[i].successors.begin(), rows[i].successors.end(), rows[j].successors.begin(),
                            rows[j].successors.end(), std::back_inserter(common));
      best = std::max(best, static_cast<int>(common.size()));
    }
  return best;
}

std::optional<SrgParameters> srg_parameters(const SignifiedGraph& h, Sign s) {
  const int n = h.order();
  std::vector<VertexSet> nb(n);
  for (Vertex v = 0; v < n; ++v) nb[v] = h.neighbor_set(v, s);
  std::optional<int> k, lambda, mu;
  auto agree = [](std::optional<int>& slot, int value) {
    if (slot && *slot != value) return false;
    slot = value;
    return true;
  };
  for (Vertex u = 0; u < n; ++u) {
    if (!agree(k, nb[u].count())) return std::nullopt;
    for (Vertex v = u + 1; v < n; ++v) {
      VertexSet common = nb[u];
      common &= nb[v];
      if (!agree(nb[u].test(v) ? lambda : mu, common.count())) return std::nullopt;
    }
  }
  return SrgParameters{n, k.value_or(0), lambda.value_or(0), mu.value_or(0)};
}

bool path_pattern_check(const SignifiedGraph& h, int len) {
  if (len < 1) throw std::invalid_argument("path length must be >= 1");
  const int n = h.order();
  std::vector<VertexSet> pos(n), neg(n);
  for (Vertex v = 0; v < n; ++v) {
    pos[v] = h.neighbor_set(v, Sign::positive);
    neg[v] = h.neighbor_set(v, Sign::negative);
  }
  const VertexSet everything(n, true);
  for (const auto& s : SignVector::all(len))
    for (Vertex x = 0; x < n; ++x) {
      VertexSet reach(n);
      reach.set(x);
      for (Sign step : s.entries) {
        VertexSet next(n);
        reach.for_each([&](Vertex a) { next |= step == Sign::positive ? pos[a] : neg[a]; });
        reach = std::move(next);
      }
      if (reach != everything) return false;
    }
  return true;
}

}  // namespace signhom
