#pragma once

// Backtracking search for signified / signed homomorphisms and exact
// signified / signed chromatic numbers.

#include <array>
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "signhom/sgraph.hpp"
#include "signhom/targets.hpp"

namespace signhom {

enum class SearchStatus { found, absent, indeterminate };

const char* to_string(SearchStatus s);

enum class VariableOrder {
  /// Reverse degeneracy rank, restricted to vertices with a placed neighbour.
  degeneracy,
  /// Most placed neighbours first, ties by degeneracy rank.
  max_constrained,
  /// Vertex index order.
  natural,
};

struct SearchConfig {
  /// Maximum number of assignments per search; 0 means unlimited.
  std::uint64_t node_limit = 0;
  /// Wall-clock budget per top-level call; zero means unlimited.
  std::chrono::milliseconds time_limit{0};
  VariableOrder order = VariableOrder::degeneracy;
  /// Pin images using the target's symmetry (see TargetSymmetry).
  bool symmetry = false;
  TargetSymmetry target_symmetry = TargetSymmetry::none;
};

struct HomResult {
  SearchStatus status = SearchStatus::indeterminate;
  Mapping map;
  std::uint64_t nodes = 0;
};

struct SignedHomResult {
  SearchStatus status = SearchStatus::indeterminate;
  /// Y: resign(G, Y) maps signified onto H via map.
  std::vector<Vertex> resign_set;
  Mapping map;
  std::uint64_t nodes = 0;
};

/// Placement order; every vertex but a component's first has an earlier
/// neighbour unless the order is natural.
std::vector<Vertex> search_order(const SignifiedGraph& g, VariableOrder order);

/// Target rows as bitsets, plus representative vertices/arcs/triangles used
/// for symmetry pinning.
class CompiledTarget {
 public:
  explicit CompiledTarget(const SignifiedGraph& h);

  int order() const { return n_; }
  int words() const { return words_; }
  const std::uint64_t* row(Vertex v, Sign s) const {
    return (s == Sign::positive ? pos_.data() : neg_.data()) + static_cast<std::size_t>(v) * words_;
  }
  /// (a, b) with a = 0 and sign(a, b) == s, if any.
  std::optional<std::pair<Vertex, Vertex>> arc_representative(Sign s) const;
  /// (a, b, c) with a = 0 and signs ab, ac, bc as given, if any.
  std::optional<std::array<Vertex, 3>> triangle_representative(Sign ab, Sign ac, Sign bc) const;

 private:
  int n_;
  int words_;
  std::vector<std::uint64_t> pos_;
  std::vector<std::uint64_t> neg_;
  SignifiedGraph graph_;
};

/// Searcher for a fixed host topology; signs may vary between solves.
/// Not thread-safe; use one instance per thread.
class HomSearcher {
 public:
  HomSearcher(const SignifiedGraph& host, std::shared_ptr<const CompiledTarget> target, SearchConfig cfg = {});

  /// Edges of the host in SignifiedGraph::edges() order; edge_signs below
  /// is indexed the same way.
  const std::vector<SignedEdge>& host_edges() const { return edges_; }

  HomResult solve(std::span<const Sign> edge_signs);
  /// g must have the host's underlying graph.
  HomResult solve(const SignifiedGraph& g);

 private:
  struct Back {
    int pos;
    int edge;
  };

  int n_;
  std::shared_ptr<const CompiledTarget> target_;
  SearchConfig cfg_;
  std::vector<SignedEdge> edges_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Back>> back_;
  std::vector<bool> component_start_;
  bool pin_triangle_ = false;
  bool pin_arc_ = false;
  std::vector<std::uint64_t> cand_;
  std::vector<Vertex> image_;
};

HomResult find_signified_hom(const SignifiedGraph& g, const SignifiedGraph& h, const SearchConfig& cfg = {});
/// Uses h.symmetry when cfg.symmetry is set.
HomResult find_signified_hom(const SignifiedGraph& g, const LabelledTarget& h, SearchConfig cfg = {});

/// Searches g -> AT(h) and folds the result into (Y, g' -> h).
SignedHomResult find_signed_hom(const SignifiedGraph& g, const SignifiedGraph& h, const SearchConfig& cfg = {});

struct ChromaticResult {
  SearchStatus status = SearchStatus::indeterminate;
  /// Chromatic number when exhausted, otherwise the best upper bound found
  /// (0 if none).
  int value = 0;
  /// Every k below this was refuted by a completed search.
  int lower_bound = 0;
  SignifiedGraph witness_target;
  Mapping witness_map;
  bool exhausted = false;
  std::uint64_t nodes = 0;
  /// chis_exact only: the resigning realising the value.
  std::vector<Vertex> resign_set;
};

/// Decides whether g has a signified k-colouring.
struct ColouringResult {
  SearchStatus status = SearchStatus::indeterminate;
  Mapping colours;
  std::uint64_t nodes = 0;
};
ColouringResult signified_colouring(const SignifiedGraph& g, int k, const SearchConfig& cfg = {});

/// Graph on the colour classes with the latched edge signs.
SignifiedGraph quotient_graph(const SignifiedGraph& g, std::span<const Vertex> colours, int k);

ChromaticResult chi2_exact(const SignifiedGraph& g, const SearchConfig& cfg = {});

/// Minimum over every resigning of g. Throws std::invalid_argument when the
/// resigning space exceeds 2^24.
ChromaticResult chis_exact(const SignifiedGraph& g, const SearchConfig& cfg = {});

}  // namespace signhom
