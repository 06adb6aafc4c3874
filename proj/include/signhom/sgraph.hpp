#pragma once

// Signified graphs: simple graphs whose edges carry a sign in {+1, -1}.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "signhom/vertex_set.hpp"

namespace signhom {

using Vertex = int;

/// A total vertex map V(G) -> V(H); image[v] is the image of v.
using Mapping = std::vector<Vertex>;

enum class Sign : std::int8_t { negative = -1, none = 0, positive = 1 };

constexpr Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
constexpr Sign operator*(Sign a, Sign b) { return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b)); }
constexpr int to_int(Sign s) { return static_cast<int>(s); }
/// Accepts +1 / -1 only.
Sign sign_from_int(int s);

struct SignedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Sign sign = Sign::positive;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

class SignifiedGraph {
 public:
  SignifiedGraph() = default;
  explicit SignifiedGraph(int n);
  /// Throws std::invalid_argument on loops, repeated pairs or bad vertices.
  SignifiedGraph(int n, std::span<const SignedEdge> edges);

  int order() const { return n_; }
  int size() const { return m_; }

  Sign sign(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return adj_[static_cast<std::size_t>(u) * n_ + v];
  }
  bool adjacent(Vertex u, Vertex v) const { return sign(u, v) != Sign::none; }

  /// Sets, replaces or (with Sign::none) removes the edge uv.
  void set_edge(Vertex u, Vertex v, Sign s);
  /// Adds a new edge; throws if uv already exists.
  void add_edge(Vertex u, Vertex v, Sign s);

  /// Edges with u < v in lexicographic order.
  std::vector<SignedEdge> edges() const;
  std::vector<Vertex> neighbors(Vertex u) const;
  std::vector<Vertex> neighbors(Vertex u, Sign s) const;
  VertexSet neighbor_set(Vertex u, Sign s) const;
  int degree(Vertex u) const;
  int degree(Vertex u, Sign s) const;

  bool same_underlying(const SignifiedGraph& other) const;
  /// Subgraph induced by the listed vertices, relabelled 0..k-1 in list order.
  SignifiedGraph induced(std::span<const Vertex> vertices) const;
  /// Graph with vertex v relabelled perm[v].
  SignifiedGraph relabelled(std::span<const Vertex> perm) const;

  friend bool operator==(const SignifiedGraph&, const SignifiedGraph&) = default;

 private:
  void check(Vertex v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<Sign> adj_;
};

/// Flips the sign of every edge with exactly one end in X.
/// Throws std::invalid_argument for out-of-range vertices.
SignifiedGraph resign(const SignifiedGraph& g, std::span<const Vertex> x);

/// Product of the edge signs along the closed walk c0 c1 ... ck-1 c0.
/// Throws std::invalid_argument if a step is not an edge.
Sign cycle_sign(const SignifiedGraph& g, std::span<const Vertex> cycle);

/// Edges of the spanning forest obtained by BFS from the least vertex of
/// each component, scanning neighbours in index order.
std::vector<SignedEdge> canonical_spanning_forest(const SignifiedGraph& g);

/// Resigning set X with resign(g, X) == canonical_signature(g); it never
/// contains the root of a component.
std::vector<Vertex> canonical_resign_set(const SignifiedGraph& g);

/// The equivalent signature in which every canonical spanning forest edge
/// is positive.
SignifiedGraph canonical_signature(const SignifiedGraph& g);

/// A set X with resign(g1, X) == g2, or nullopt if the signatures are not
/// equivalent. Throws std::invalid_argument if the underlying graphs differ.
std::optional<std::vector<Vertex>> equivalent(const SignifiedGraph& g1, const SignifiedGraph& g2);

/// The anti-twin involution, or nullopt if the graph is not anti-twinned.
std::optional<Mapping> anti_twin_pairing(const SignifiedGraph& g);

/// Shortest cycle length, nullopt for forests.
std::optional<int> girth(const SignifiedGraph& g);

bool is_valid_hom(const SignifiedGraph& g, const SignifiedGraph& h, std::span<const Vertex> map);

/// Component index per vertex, numbered by least vertex.
std::vector<int> components(const SignifiedGraph& g);
bool is_connected(const SignifiedGraph& g);

SignifiedGraph disjoint_union(const SignifiedGraph& a, const SignifiedGraph& b);

/// Every edge replaced by its opposite sign.
SignifiedGraph negated(const SignifiedGraph& g);

}  // namespace signhom
