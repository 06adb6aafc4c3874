#pragma once

// Exhaustive "every signature class maps to the target" runs over planar
// triangulations read from planar_code, with checkpoint and resume.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "signhom/homsearch.hpp"
#include "signhom/props.hpp"
#include "signhom/sgraph.hpp"
#include "signhom/targets.hpp"

namespace signhom {

struct EmbeddedGraph {
  int n = 0;
  /// Cyclic neighbour order around each vertex.
  std::vector<std::vector<Vertex>> rotation;

  int edge_count() const;
  /// Underlying graph with every edge positive.
  SignifiedGraph graph() const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr std::string_view planar_code_header = ">>planar_code<<";

/// Header, then per graph a byte n and, for each vertex, its 1-based
/// neighbours in rotation order followed by 0. Also rejects loops, repeated
/// neighbours and rotations that are not symmetric.
std::vector<EmbeddedGraph> read_planar_code(std::span<const std::uint8_t> bytes);
std::vector<EmbeddedGraph> read_planar_code_file(const std::string& path);
std::vector<std::uint8_t> write_planar_code(const std::vector<EmbeddedGraph>& graphs);

/// Faces of the embedding; dart (u, v) is followed by (v, w) where w comes
/// right after u in v's rotation.
std::vector<std::vector<Vertex>> trace_faces(const EmbeddedGraph& g);

/// All faces are triangles, f = 2 - n + m, and every triangle of the graph
/// is a face (no separating triangle).
bool validate_triangulation(const EmbeddedGraph& g);

/// One representative per resigning class: canonical spanning forest edges
/// positive, co-tree edges read off the bits of the class index.
class SignatureEnumerator {
 public:
  explicit SignatureEnumerator(const SignifiedGraph& underlying);

  std::uint64_t classes() const { return std::uint64_t{1} << cotree_.size(); }
  int cotree_size() const { return static_cast<int>(cotree_.size()); }
  /// Edges in SignifiedGraph::edges() order.
  const std::vector<SignedEdge>& edges() const { return edges_; }
  /// Bit j of index gives the sign of the j-th co-tree edge (1 = negative).
  void signs(std::uint64_t index, std::vector<Sign>& out) const;
  SignifiedGraph representative(std::uint64_t index) const;

 private:
  SignifiedGraph underlying_;
  std::vector<SignedEdge> edges_;
  std::vector<int> cotree_;
};

struct CampaignConfig {
  /// Classes per checkpoint round.
  std::uint64_t checkpoint_every = 4096;
  std::optional<std::string> checkpoint_path;
  /// Stop after this many classes in this run (simulated interruption).
  std::optional<std::uint64_t> stop_after;
  SearchConfig search;
  /// Classes re-solved after a random resigning, per graph. Skipped for
  /// targets without anti-twins, where the answer may differ within a class.
  int consistency_samples = 16;
  std::uint64_t seed = 1;
  Exec exec = Exec::parallel;
};

struct CampaignReport {
  int graph = 0;
  int n = 0;
  int m = 0;
  std::uint64_t classes_total = 0;
  std::uint64_t classes_done = 0;
  /// Class indices without a homomorphism, ascending.
  std::vector<std::uint64_t> failures;
  /// Class indices whose search hit the budget, ascending.
  std::vector<std::uint64_t> undecided;
  int consistency_checked = 0;
  int consistency_mismatches = 0;
  std::string error;
  double elapsed_seconds = 0;

  bool complete() const { return error.empty() && classes_done == classes_total; }
};

nlohmann::json report_to_json(const CampaignReport& r);

using ReportSink = std::function<void(const CampaignReport&)>;

std::vector<CampaignReport> run_campaign(const std::vector<EmbeddedGraph>& graphs, const LabelledTarget& target,
                                         const CampaignConfig& cfg, const ReportSink& sink = {});
/// Parses the stream first; a parse error yields a single report carrying it.
std::vector<CampaignReport> run_campaign(std::span<const std::uint8_t> stream, const LabelledTarget& target,
                                         const CampaignConfig& cfg, const ReportSink& sink = {});

struct CheckpointEntry {
  int graph = 0;
  std::uint64_t cursor = 0;
  std::vector<std::uint64_t> failures;
};

/// One line per graph: "index cursor failures", failures comma-separated or "-".
std::vector<CheckpointEntry> read_checkpoint(const std::string& path);
void write_checkpoint(const std::string& path, const std::vector<CheckpointEntry>& entries);

}  // namespace signhom
