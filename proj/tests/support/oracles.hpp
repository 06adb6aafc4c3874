#pragma once

// Brute-force reference implementations. Deliberately naive: they share no
// search code with the library and are only meant for tiny inputs.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "signhom/sgraph.hpp"

namespace signhom::oracle {

// Sign matrix as plain ints: 0 none, +1, -1.
using Matrix = std::vector<std::vector<int>>;

Matrix matrix_of(const SignifiedGraph& g);

bool is_hom(const Matrix& g, const Matrix& h, const std::vector<int>& map);

/// Exhaustive backtracking in natural order.
bool signified_hom_exists(const SignifiedGraph& g, const SignifiedGraph& h);
/// Every resigning of g, then signified_hom_exists.
bool signed_hom_exists(const SignifiedGraph& g, const SignifiedGraph& h);

/// Smallest k admitting a colouring with proper colours and one sign per
/// colour pair, by enumerating all k^n colourings.
int chi2(const SignifiedGraph& g);
/// Minimum of chi2 over all 2^n resignings.
int chis(const SignifiedGraph& g);

/// Some X with resign(g1, X) == g2, over all 2^n subsets.
bool equivalent(const SignifiedGraph& g1, const SignifiedGraph& g2);

/// Orbits of all 2^m signatures under all 2^n resignings.
std::uint64_t signature_class_count(const SignifiedGraph& underlying);

/// Shortest cycle through removal of each edge in turn.
std::optional<int> girth(const SignifiedGraph& g);

/// All (x, y, pattern) reachable by walks of the given length, checked
/// against the full set.
bool path_patterns_complete(const SignifiedGraph& h, int len);

/// Squares of GF(q) computed with polynomial arithmetic mod x^2 - r.
std::set<std::pair<int, int>> nonzero_squares(int p, int k, int r);

/// Automorphism count by trying all permutations (n <= 8).
std::uint64_t automorphism_count(const SignifiedGraph& g);

SignifiedGraph random_graph(std::mt19937_64& rng, int n, double edge_probability);
bool connected(const SignifiedGraph& g);

/// All connected graphs on n vertices (positive edges), one per
/// isomorphism class, found by trying all permutations.
std::vector<SignifiedGraph> connected_graphs_up_to_iso(int n);

}  // namespace signhom::oracle
