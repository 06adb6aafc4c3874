#pragma once

// Structural properties of target graphs: alpha-successors, P(n,k),
// automorphisms and orbits, the four-successor rows of AT(SP_25), signed path patterns.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "signhom/gf.hpp"
#include "signhom/sgraph.hpp"
#include "signhom/targets.hpp"

namespace signhom {

enum class Exec { serial, parallel };

struct SignVector {
  std::vector<Sign> entries;

  int size() const { return static_cast<int>(entries.size()); }
  SignVector conjugate() const;
  std::string str() const;
  /// All 2^k vectors in lexicographic order with + before -.
  static std::vector<SignVector> all(int k);

  friend bool operator==(const SignVector&, const SignVector&) = default;
};

/// S^alpha(X). Throws std::invalid_argument unless X is a sequence of
/// distinct pairwise adjacent vertices with |X| == |alpha|.
std::vector<Vertex> alpha_successors(const SignifiedGraph& h, std::span<const Vertex> x, const SignVector& alpha);

struct PropertyWitness {
  std::vector<Vertex> clique;
  SignVector alpha;
  int successors = 0;
};

struct PropertyReport {
  int n = 0;
  int k = 0;
  bool holds = true;
  /// First failing (X, alpha) in enumeration order; present iff !holds.
  std::optional<PropertyWitness> witness;
  /// Minimum |S^alpha(X)| over all sequences; nullopt when H has no n-clique.
  std::optional<int> min_successors;
  std::uint64_t sequences = 0;
};

/// Exhaustive P(n,k) check. The parallel path uses bitset rows and OpenMP
/// over the first clique vertex; the serial path is a plain enumeration kept
/// as the reference. Both produce identical reports.
PropertyReport check_property(const SignifiedGraph& h, int n, int k, Exec exec = Exec::parallel);

/// Throws std::invalid_argument if sigma is not a permutation of V(H).
bool verify_automorphism(const SignifiedGraph& h, std::span<const Vertex> sigma);
bool verify_anti_automorphism(const SignifiedGraph& h, std::span<const Vertex> rho);

Mapping compose(std::span<const Vertex> outer, std::span<const Vertex> inner);

struct NamedMapping {
  std::string name;
  Mapping map;
};

// Maps on Tr(SP_q) in the build_tromp vertex layout.
Mapping tromp_gamma1(int q);
Mapping tromp_gamma3(int q);
Mapping tromp_translation(int q, FieldElem b);
Mapping tromp_scaling(int q, FieldElem a);
Mapping tromp_frobenius(int q);
/// Anti-automorphism u_i -> (n u)_{1-i}, ∞_i fixed. n must be a non-square.
Mapping tromp_gamma_n(int q, FieldElem n);
/// gamma1, gamma3, u -> u+b for every b, u -> a u for every square a, and
/// the Frobenius map.
std::vector<NamedMapping> tromp_generators(int q);

// The same affine and Frobenius maps on SP_q itself.
Mapping sp_translation(int q, FieldElem b);
Mapping sp_scaling(int q, FieldElem a);
Mapping sp_frobenius(int q);
std::vector<NamedMapping> sp_generators(int q);

struct TriangleOrbit {
  std::size_t size = 0;
  std::array<Vertex, 3> representative{};
  /// Distinct ordered sign patterns (ab, ac, bc) inside the orbit.
  std::vector<std::array<Sign, 3>> patterns;
};

struct EdgeOrbit {
  std::size_t size = 0;
  SignedEdge representative;
  std::vector<Sign> signs;
};

struct OrbitReport {
  std::vector<std::vector<Vertex>> vertex_orbits;
  std::vector<EdgeOrbit> edge_orbits;
  std::vector<TriangleOrbit> triangle_orbits;
};

/// Orbits of the group generated by the given automorphisms on vertices,
/// unordered edges and ordered triangles. Throws std::invalid_argument if a
/// generator is not an automorphism.
OrbitReport orbit_closure(const SignifiedGraph& h, const std::vector<NamedMapping>& generators);

struct Table1Row {
  std::array<Vertex, 3> triple{};
  std::vector<Vertex> successors;
  std::string text;
};

/// Rows (0_0, 1_0, x_0) of AT(SP_25) with exactly four (+1,+1,+1)-successors.
std::vector<Table1Row> table1_scan();
/// The expected rows as printed, one per line.
const std::vector<std::string>& table1_golden();
/// Largest number of successors shared by two distinct rows.
int max_common_successors(const std::vector<Table1Row>& rows);

struct SrgParameters {
  int v = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;
  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

/// Parameters of the subgraph formed by the edges of sign s, if it is
/// strongly regular.
std::optional<SrgParameters> srg_parameters(const SignifiedGraph& h, Sign s);

/// True iff for all x, y and every sign vector s of length len there is a
/// walk x = a0, a1, ..., a_len = y whose i-th edge has sign s_i.
bool path_pattern_check(const SignifiedGraph& h, int len);

}  // namespace signhom
