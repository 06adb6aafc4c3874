#pragma once

// Lower-bound and uniqueness witnesses: the glued graphs G1..G5, G4', G5',
// the catalogue of 4-regular graphs on 9 vertices, and random outerplanar
// instances of girth >= 4.

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "signhom/homsearch.hpp"
#include "signhom/props.hpp"
#include "signhom/sgraph.hpp"

namespace signhom {

struct Attachment {
  Vertex base_vertex;
  SignifiedGraph copy;
  Vertex copy_vertex;
};

struct GlueRecipe {
  SignifiedGraph base;
  std::vector<Attachment> attachments;
};

/// Base vertices keep their numbers; each attachment then appends its copy's
/// vertices, in copy order, skipping the identified one.
SignifiedGraph glue(const GlueRecipe& recipe);
/// Vertices of the glued graph that attachment i occupies, indexed by copy vertex.
std::vector<Vertex> attachment_vertices(const GlueRecipe& recipe, std::size_t i);

const std::vector<std::string>& witness_names();
GlueRecipe witness_recipe(const std::string& name);
/// Throws std::invalid_argument for unknown names.
SignifiedGraph build_witness(const std::string& name);

enum class StageStatus { pass, fail, indeterminate };
const char* to_string(StageStatus s);

struct StageReport {
  std::string name;
  StageStatus status = StageStatus::fail;
  nlohmann::json certificate;
};

struct ChainReport {
  std::vector<StageReport> stages;
  bool passed() const;
  /// First stage that did not pass, if any.
  const StageReport* failing() const;
};

struct ChainOptions {
  /// Budget for each exact chromatic computation.
  std::chrono::milliseconds budget{600000};
  /// Also refute 18-colourings of G4 by raw search.
  bool raw_g4_refutation = false;
};

ChainReport verify_g_chain(const ChainOptions& options = {});

/// True when no graph on n vertices is k-regular (n * k odd).
bool regular_parity_obstruction(int n, int k);

/// chi_2(G4') >= 9 through its G3 subgraph and <= 9 through a map to SP_9.
ChainReport verify_g4prime(const ChainOptions& options = {});

/// Connected 4-regular graphs on 9 vertices up to isomorphism, as signified
/// complete graphs (edges positive, non-edges negative).
std::vector<SignifiedGraph> enumerate_4regular_9(Exec exec = Exec::parallel);

/// For every vertex, both the positive and the negative neighbourhood
/// contain a perfect matching of their own sign.
bool matching_condition(const SignifiedGraph& g);
/// Throws std::invalid_argument unless every vertex has 4 positive and 4
/// negative neighbours.
std::vector<SignifiedGraph> matching_filter(const std::vector<SignifiedGraph>& candidates);

struct PlusShapeReport {
  bool clique = false;
  bool no_anti_twins = false;
  bool at_isomorphic_to_tromp = false;
  Mapping isomorphism;
  bool passed() const { return clique && no_anti_twins && at_isomorphic_to_tromp; }
};
PlusShapeReport verify_plus_shape();

/// Random outerplanar graph with girth >= 4 and random signs: blocks grown by
/// ears of length >= 3 on outer edges, glued at cut vertices, plus pendant
/// edges. Returns a connected graph with about `vertices` vertices.
SignifiedGraph random_outerplanar_girth4(std::mt19937_64& rng, int vertices);

}  // namespace signhom
