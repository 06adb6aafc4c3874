#pragma once

// Target graph families: AT(G), G+, ZS_k, SP_q, Tr(SP_q), K4*.

#include <optional>
#include <string>
#include <vector>

#include "signhom/gf.hpp"
#include "signhom/sgraph.hpp"

namespace signhom {

struct VertexLabel {
  std::string text;
  /// Copy index in AT/Tr families, -1 elsewhere.
  int copy = -1;
  std::optional<FieldElem> element;
  bool infinity = false;
  /// ZS_k: the class i (1-based) and the vector alpha with alpha_i = 0.
  int zs_class = 0;
  std::vector<int> zs_alpha;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

/// Symmetry a target is known to have; homsearch may pin images accordingly.
enum class TargetSymmetry {
  none,
  vertex_transitive,
  /// Vertex-transitive and transitive on ordered edges of each sign.
  arc_transitive,
  /// Transitive on ordered triangles of each ordered sign pattern.
  triangle_transitive,
};

struct LabelledTarget {
  SignifiedGraph graph;
  std::vector<VertexLabel> labels;
  TargetSymmetry symmetry = TargetSymmetry::none;
  /// Set for SP_q, AT(SP_q) and Tr(SP_q).
  std::optional<FieldSpec> field;

  /// Vertex carrying the given label text; throws std::invalid_argument.
  Vertex find(const std::string& text) const;
  std::vector<std::string> label_texts() const;
};

/// Labels "0".."n-1", no symmetry.
LabelledTarget plain_target(const SignifiedGraph& g);

LabelledTarget build_at(const LabelledTarget& g);
LabelledTarget build_at(const SignifiedGraph& g);

/// Adds a universal vertex, positively joined to every vertex, labelled "∞".
LabelledTarget build_plus(const LabelledTarget& g);
SignifiedGraph build_plus(const SignifiedGraph& g);

/// Throws std::invalid_argument for k < 2.
LabelledTarget build_zs(int k);

/// Throws std::invalid_argument unless q is a supported field order.
LabelledTarget build_sp(int q);

/// Tr(SP_q) from the closed-form signs; vertex order 0_0..(q-1)_0, ∞_0,
/// 0_1..(q-1)_1, ∞_1.
LabelledTarget build_tromp(int q);

/// K4 with edge {0,1} negative.
SignifiedGraph build_k4star();

/// Vertex of u_i (or ∞_i when u is nullopt) in AT(SP_q) / Tr(SP_q) layouts.
Vertex tromp_vertex(const Field& f, std::optional<FieldElem> u, int copy);
Vertex at_sp_vertex(const Field& f, FieldElem u, int copy);

/// Resolves "at-k4star", "k4star", "zs-K", "sp-Q", "sp-Q-plus", "tromp-Q",
/// "tromp9" style aliases and "at-sp-Q". Throws std::invalid_argument.
LabelledTarget build_named_target(const std::string& name);

}  // namespace signhom
