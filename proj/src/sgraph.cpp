#include "signhom/sgraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

namespace signhom {

Sign sign_from_int(int s) {
  if (s == 1) return Sign::positive;
  if (s == -1) return Sign::negative;
  throw std::invalid_argument("edge sign must be 1 or -1, got " + std::to_string(s));
}

SignifiedGraph::SignifiedGraph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n) * n, Sign::none);
}

SignifiedGraph::SignifiedGraph(int n, std::span<const SignedEdge> edges) : SignifiedGraph(n) {
  for (const auto& e : edges) add_edge(e.u, e.v, e.sign);
}

void SignifiedGraph::check(Vertex v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

void SignifiedGraph::set_edge(Vertex u, Vertex v, Sign s) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  Sign& slot = adj_[static_cast<std::size_t>(u) * n_ + v];
  if (slot == Sign::none && s != Sign::none) ++m_;
  if (slot != Sign::none && s == Sign::none) --m_;
  slot = s;
  adj_[static_cast<std::size_t>(v) * n_ + u] = s;
}

void SignifiedGraph::add_edge(Vertex u, Vertex v, Sign s) {
  if (s == Sign::none) throw std::invalid_argument("edge needs a sign");
  if (adjacent(u, v)) throw std::invalid_argument("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
  set_edge(u, v, s);
}

std::vector<SignedEdge> SignifiedGraph::edges() const {
  std::vector<SignedEdge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (Sign s = adj_[static_cast<std::size_t>(u) * n_ + v]; s != Sign::none) out.push_back({u, v, s});
  return out;
}

std::vector<Vertex> SignifiedGraph::neighbors(Vertex u) const {
  check(u);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v)
    if (adj_[static_cast<std::size_t>(u) * n_ + v] != Sign::none) out.push_back(v);
  return out;
}

std::vector<Vertex> SignifiedGraph::neighbors(Vertex u, Sign s) const {
  check(u);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v)
    if (adj_[static_cast<std::size_t>(u) * n_ + v] == s) out.push_back(v);
  return out;
}

VertexSet SignifiedGraph::neighbor_set(Vertex u, Sign s) const {
  check(u);
  VertexSet out(n_);
  for (Vertex v = 0; v < n_; ++v)
    if (adj_[static_cast<std::size_t>(u) * n_ + v] == s) out.set(v);
  return out;
}

int SignifiedGraph::degree(Vertex u) const { return static_cast<int>(neighbors(u).size()); }

int SignifiedGraph::degree(Vertex u, Sign s) const { return static_cast<int>(neighbors(u, s).size()); }

bool SignifiedGraph::same_underlying(const SignifiedGraph& other) const {
  if (n_ != other.n_) return false;
  for (std::size_t i = 0; i < adj_.size(); ++i)
    if ((adj_[i] == Sign::none) != (other.adj_[i] == Sign::none)) return false;
  return true;
}

SignifiedGraph SignifiedGraph::induced(std::span<const Vertex> vertices) const {
  SignifiedGraph out(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (Sign s = sign(vertices[i], vertices[j]); s != Sign::none)
        out.set_edge(static_cast<Vertex>(i), static_cast<Vertex>(j), s);
  return out;
}

SignifiedGraph SignifiedGraph::relabelled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation has wrong length");
  std::vector<bool> seen(n_, false);
  for (Vertex v : perm) {
    check(v);
    if (seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  SignifiedGraph out(n_);
  for (const auto& e : edges()) out.set_edge(perm[e.u], perm[e.v], e.sign);
  return out;
}

SignifiedGraph resign(const SignifiedGraph& g, std::span<const Vertex> x) {
  std::vector<bool> in(g.order(), false);
  for (Vertex v : x) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("resign set vertex out of range");
    in[v] = true;
  }
  SignifiedGraph out = g;
  for (const auto& e : g.edges())
    if (in[e.u] != in[e.v]) out.set_edge(e.u, e.v, -e.sign);
  return out;
}

Sign cycle_sign(const SignifiedGraph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 2) throw std::invalid_argument("cycle needs at least two vertices");
  Sign total = Sign::positive;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex u = cycle[i];
    const Vertex v = cycle[(i + 1) % cycle.size()];
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v || !g.adjacent(u, v))
      throw std::invalid_argument("walk uses a missing edge");
    total = total * g.sign(u, v);
  }
  return total;
}

namespace {

// BFS forest; parent[root] = -1. Visits components from least vertex.
struct BfsForest {
  std::vector<Vertex> parent;
  std::vector<Vertex> order;
};

BfsForest bfs_forest(const SignifiedGraph& g) {
  const int n = g.order();
  BfsForest f{std::vector<Vertex>(n, -2), {}};
  for (Vertex root = 0; root < n; ++root) {
    if (f.parent[root] != -2) continue;
    f.parent[root] = -1;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      f.order.push_back(u);
      for (Vertex v : g.neighbors(u))
        if (f.parent[v] == -2) {
          f.parent[v] = u;
          q.push(v);
        }
    }
  }
  return f;
}

}  // namespace

std::vector<SignedEdge> canonical_spanning_forest(const SignifiedGraph& g) {
  const auto f = bfs_forest(g);
  std::vector<SignedEdge> out;
  for (Vertex v : f.order)
    if (f.parent[v] >= 0) out.push_back({f.parent[v], v, g.sign(f.parent[v], v)});
  return out;
}

std::vector<Vertex> canonical_resign_set(const SignifiedGraph& g) {
  const auto f = bfs_forest(g);
  // Potential x(v): x(child) = x(parent) xor [tree edge negative].
  std::vector<char> flip(g.order(), 0);
  for (Vertex v : f.order)
    if (f.parent[v] >= 0) flip[v] = flip[f.parent[v]] ^ (g.sign(f.parent[v], v) == Sign::negative);
  std::vector<Vertex> x;
  for (Vertex v = 0; v < g.order(); ++v)
    if (flip[v]) x.push_back(v);
  return x;
}

SignifiedGraph canonical_signature(const SignifiedGraph& g) { return resign(g, canonical_resign_set(g)); }

std::optional<std::vector<Vertex>> equivalent(const SignifiedGraph& g1, const SignifiedGraph& g2) {
  if (!g1.same_underlying(g2)) throw std::invalid_argument("equivalent: underlying graphs differ");
  if (canonical_signature(g1) != canonical_signature(g2)) return std::nullopt;
  // resign(g1, X1) = C = resign(g2, X2), so resign(g1, X1 xor X2) = g2.
  std::vector<char> in(g1.order(), 0);
  for (Vertex v : canonical_resign_set(g1)) in[v] ^= 1;
  for (Vertex v : canonical_resign_set(g2)) in[v] ^= 1;
  std::vector<Vertex> x;
  for (Vertex v = 0; v < g1.order(); ++v)
    if (in[v]) x.push_back(v);
  return x;
}

std::optional<Mapping> anti_twin_pairing(const SignifiedGraph& g) {
  // u and w are anti-twins iff (N+(u), N-(u)) == (N-(w), N+(w)); such pairs
  // are automatically non-adjacent. Group vertices by neighbourhood key.
  const int n = g.order();
  using Key = std::pair<VertexSet, VertexSet>;
  std::map<Key, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < n; ++v)
    groups[{g.neighbor_set(v, Sign::positive), g.neighbor_set(v, Sign::negative)}].push_back(v);

  Mapping atw(n, -1);
  for (const auto& [key, members] : groups) {
    if (atw[members.front()] != -1) continue;
    const Key mirror{key.second, key.first};
    if (mirror == key) {
      // Isolated vertices pair among themselves.
      if (members.size() % 2) return std::nullopt;
      for (std::size_t i = 0; i < members.size(); i += 2) {
        atw[members[i]] = members[i + 1];
        atw[members[i + 1]] = members[i];
      }
      continue;
    }
    auto it = groups.find(mirror);
    if (it == groups.end() || it->second.size() != members.size()) return std::nullopt;
    for (std::size_t i = 0; i < members.size(); ++i) {
      atw[members[i]] = it->second[i];
      atw[it->second[i]] = members[i];
    }
  }
  return atw;
}

std::optional<int> girth(const SignifiedGraph& g) {
  const int n = g.order();
  int best = -1;
  for (Vertex s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (parent[u] != v) {
          const int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

bool is_valid_hom(const SignifiedGraph& g, const SignifiedGraph& h, std::span<const Vertex> map) {
  if (static_cast<int>(map.size()) != g.order()) return false;
  for (Vertex x : map)
    if (x < 0 || x >= h.order()) return false;
  for (const auto& e : g.edges()) {
    if (map[e.u] == map[e.v]) return false;
    if (h.sign(map[e.u], map[e.v]) != e.sign) return false;
  }
  return true;
}

std::vector<int> components(const SignifiedGraph& g) {
  std::vector<int> comp(g.order(), -1);
  int c = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u))
        if (comp[v] < 0) {
          comp[v] = c;
          stack.push_back(v);
        }
    }
    ++c;
  }
  return comp;
}

bool is_connected(const SignifiedGraph& g) {
  const auto c = components(g);
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

SignifiedGraph disjoint_union(const SignifiedGraph& a, const SignifiedGraph& b) {
  SignifiedGraph out(a.order() + b.order());
  for (const auto& e : a.edges()) out.set_edge(e.u, e.v, e.sign);
  for (const auto& e : b.edges()) out.set_edge(e.u + a.order(), e.v + a.order(), e.sign);
  return out;
}

SignifiedGraph negated(const SignifiedGraph& g) {
  SignifiedGraph out(g.order());
  for (const auto& e : g.edges()) out.set_edge(e.u, e.v, -e.sign);
  return out;
}

}  // namespace signhom
