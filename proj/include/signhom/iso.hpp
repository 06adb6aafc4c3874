#pragma once

// Isomorphism of small signified graphs: a canonical form by
// individualization-refinement and a direct backtracking isomorphism search.
// The two are independent and are cross-checked in the tests.

#include <optional>
#include <string>
#include <utility>

#include "signhom/sgraph.hpp"

namespace signhom {

struct CanonicalForm {
  /// Upper triangle of the relabelled sign matrix, row-major: '0', '+', '-'.
  std::string code;
  /// labelling[v] = position of v in canonical order.
  Mapping labelling;
};

/// Isomorphic graphs get equal codes. Intended for up to a few dozen
/// vertices with moderate symmetry.
CanonicalForm canonical_form(const SignifiedGraph& g);

/// Sign-preserving isomorphism g -> h, optionally forcing pin.first -> pin.second.
std::optional<Mapping> signified_iso(const SignifiedGraph& g, const SignifiedGraph& h,
                                     std::optional<std::pair<Vertex, Vertex>> pin = std::nullopt);

/// Vertex-transitivity by searching an automorphism 0 -> v for every v.
/// Cross-check only; throws std::invalid_argument above 20 vertices.
bool vertex_transitive_by_search(const SignifiedGraph& h);

}  // namespace signhom
