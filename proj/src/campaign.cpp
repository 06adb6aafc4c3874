#include "signhom/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace signhom {

int EmbeddedGraph::edge_count() const {
  int darts = 0;
  for (const auto& r : rotation) darts += static_cast<int>(r.size());
  return darts / 2;
}

SignifiedGraph EmbeddedGraph::graph() const {
  SignifiedGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : rotation[u])
      if (u < v) g.set_edge(u, v, Sign::positive);
  return g;
}

std::vector<EmbeddedGraph> read_planar_code(std::span<const std::uint8_t> bytes) {
  const std::size_t hlen = planar_code_header.size();
  if (bytes.size() < hlen || !std::equal(planar_code_header.begin(), planar_code_header.end(), bytes.begin()))
    throw ParseError("missing >>planar_code<< header", 0);
  std::vector<EmbeddedGraph> out;
  std::size_t at = hlen;
  while (at < bytes.size()) {
    const std::size_t record = at;
    EmbeddedGraph g;
    g.n = bytes[at++];
    if (g.n == 0) throw ParseError("vertex count 0", record);
    g.rotation.resize(g.n);
    for (Vertex v = 0; v < g.n; ++v) {
      for (;;) {
        if (at >= bytes.size()) throw ParseError("truncated record", at);
        const int b = bytes[at];
        if (b == 0) {
          ++at;
          break;
        }
        if (b > g.n) throw ParseError("neighbour " + std::to_string(b) + " out of range", at);
        if (b - 1 == v) throw ParseError("loop", at);
        if (std::find(g.rotation[v].begin(), g.rotation[v].end(), b - 1) != g.rotation[v].end())
          throw ParseError("repeated neighbour", at);
        g.rotation[v].push_back(b - 1);
        ++at;
      }
    }
    for (Vertex u = 0; u < g.n; ++u)
      for (Vertex v : g.rotation[u])
        if (std::find(g.rotation[v].begin(), g.rotation[v].end(), u) == g.rotation[v].end())
          throw ParseError("rotation system is not symmetric", record);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<EmbeddedGraph> read_planar_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return read_planar_code(bytes);
}

std::vector<std::uint8_t> write_planar_code(const std::vector<EmbeddedGraph>& graphs) {
  std::vector<std::uint8_t> out(planar_code_header.begin(), planar_code_header.end());
  for (const auto& g : graphs) {
    if (g.n < 1 || g.n > 255) throw std::invalid_argument("planar_code stores 1..255 vertices");
    out.push_back(static_cast<std::uint8_t>(g.n));
    for (const auto& r : g.rotation) {
      for (Vertex v : r) out.push_back(static_cast<std::uint8_t>(v + 1));
      out.push_back(0);
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> trace_faces(const EmbeddedGraph& g) {
  std::vector<std::map<Vertex, int>> pos(g.n);
  for (Vertex v = 0; v < g.n; ++v)
    for (std::size_t i = 0; i < g.rotation[v].size(); ++i) pos[v][g.rotation[v][i]] = static_cast<int>(i);
  std::set<std::pair<Vertex, Vertex>> used;
  std::vector<std::vector<Vertex>> faces;
  for (Vertex u0 = 0; u0 < g.n; ++u0)
    for (Vertex v0 : g.rotation[u0]) {
      if (used.count({u0, v0})) continue;
      std::vector<Vertex> face;
      Vertex u = u0, v = v0;
      while (used.insert({u, v}).second) {
        face.push_back(u);
        const auto& rv = g.rotation[v];
        const Vertex w = rv[(pos[v].at(u) + 1) % rv.size()];
        u = v;
        v = w;
      }
      faces.push_back(std::move(face));
    }
  return faces;
}

bool validate_triangulation(const EmbeddedGraph& g) {
  if (g.n < 3) return false;
  const auto faces = trace_faces(g);
  const int m = g.edge_count();
  if (static_cast<int>(faces.size()) != 2 - g.n + m) return false;
  std::set<std::array<Vertex, 3>> face_set;
  for (const auto& f : faces) {
    if (f.size() != 3) return false;
    std::array<Vertex, 3> t{f[0], f[1], f[2]};
    std::sort(t.begin(), t.end());
    face_set.insert(t);
  }
  const SignifiedGraph u = g.graph();
  for (Vertex a = 0; a < g.n; ++a)
    for (Vertex b = a + 1; b < g.n; ++b) {
      if (!u.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < g.n; ++c)
        if (u.adjacent(a, c) && u.adjacent(b, c) && !face_set.count({a, b, c})) return false;
    }
  return true;
}

SignatureEnumerator::SignatureEnumerator(const SignifiedGraph& underlying)
    : underlying_(underlying), edges_(underlying.edges()) {
  std::set<std::pair<Vertex, Vertex>> tree;
  for (const auto& e : canonical_spanning_forest(underlying)) tree.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (!tree.count({edges_[i].u, edges_[i].v})) cotree_.push_back(static_cast<int>(i));
  if (cotree_.size() > 62) throw std::invalid_argument("too many signature classes to enumerate");
}

void SignatureEnumerator::signs(std::uint64_t index, std::vector<Sign>& out) const {
  out.assign(edges_.size(), Sign::positive);
  for (std::size_t j = 0; j < cotree_.size(); ++j)
    if ((index >> j) & 1) out[cotree_[j]] = Sign::negative;
}

SignifiedGraph SignatureEnumerator::representative(std::uint64_t index) const {
  std::vector<Sign> s;
  signs(index, s);
  SignifiedGraph g(underlying_.order());
  for (std::size_t i = 0; i < edges_.size(); ++i) g.set_edge(edges_[i].u, edges_[i].v, s[i]);
  return g;
}

nlohmann::json report_to_json(const CampaignReport& r) {
  nlohmann::json j{{"graph", r.graph},
                   {"n", r.n},
                   {"m", r.m},
                   {"classes_total", r.classes_total},
                   {"classes_done", r.classes_done},
                   {"failures", r.failures},
                   {"undecided", r.undecided},
                   {"consistency_checked", r.consistency_checked},
                   {"consistency_mismatches", r.consistency_mismatches},
                   {"complete", r.complete()},
                   {"elapsed_seconds", r.elapsed_seconds}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

std::vector<CheckpointEntry> read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open checkpoint " + path);
  std::vector<CheckpointEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    CheckpointEntry e;
    std::string failures, extra;
    if (!(ls >> e.graph >> e.cursor >> failures) || (ls >> extra))
      throw std::runtime_error("bad checkpoint line " + std::to_string(lineno));
    if (failures != "-") {
      std::istringstream fs(failures);
      std::string tok;
      while (std::getline(fs, tok, ',')) e.failures.push_back(std::stoull(tok));
    }
    out.push_back(std::move(e));
  }
  return out;
}

void write_checkpoint(const std::string& path, const std::vector<CheckpointEntry>& entries) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    for (const auto& e : entries) {
      out << e.graph << ' ' << e.cursor << ' ';
      if (e.failures.empty()) out << '-';
      for (std::size_t i = 0; i < e.failures.size(); ++i) out << (i ? "," : "") << e.failures[i];
      out << '\n';
    }
  }
  std::filesystem::rename(tmp, path);
}

namespace {

void upsert(std::vector<CheckpointEntry>& entries, const CheckpointEntry& e) {
  for (auto& x : entries)
    if (x.graph == e.graph) {
      x = e;
      return;
    }
  entries.push_back(e);
}

}  // namespace

std::vector<CampaignReport> run_campaign(const std::vector<EmbeddedGraph>& graphs, const LabelledTarget& target,
                                         const CampaignConfig& cfg, const ReportSink& sink) {
  if (cfg.checkpoint_every == 0) throw std::invalid_argument("checkpoint_every must be positive");
  SearchConfig search = cfg.search;
  if (search.symmetry) search.target_symmetry = target.symmetry;
  const auto compiled = std::make_shared<const CompiledTarget>(target.graph);
  // Only an anti-twinned target makes the answer a property of the whole
  // resigning class, so only then is the sampled re-check meaningful.
  const bool class_invariant = anti_twin_pairing(target.graph).has_value();

  std::vector<CheckpointEntry> checkpoint;
  if (cfg.checkpoint_path && std::filesystem::exists(*cfg.checkpoint_path))
    checkpoint = read_checkpoint(*cfg.checkpoint_path);
  std::optional<std::uint64_t> budget = cfg.stop_after;

  std::vector<CampaignReport> reports;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const auto started = std::chrono::steady_clock::now();
    CampaignReport rep;
    rep.graph = static_cast<int>(gi);
    rep.n = graphs[gi].n;
    rep.m = graphs[gi].edge_count();
    try {
      const SignifiedGraph host = graphs[gi].graph();
      const SignatureEnumerator classes(host);
      rep.classes_total = classes.classes();
      CheckpointEntry entry{rep.graph, 0, {}};
      for (const auto& e : checkpoint)
        if (e.graph == rep.graph) entry = e;
      if (entry.cursor > rep.classes_total) throw std::runtime_error("checkpoint cursor beyond class count");

      while (entry.cursor < rep.classes_total) {
        std::uint64_t chunk = std::min(cfg.checkpoint_every, rep.classes_total - entry.cursor);
        if (budget) chunk = std::min(chunk, *budget);
        if (chunk == 0) break;
        std::vector<SearchStatus> status(chunk);
        const std::uint64_t base = entry.cursor;
        const auto count = static_cast<std::int64_t>(chunk);
        if (cfg.exec == Exec::parallel) {
#pragma omp parallel
          {
            HomSearcher searcher(host, compiled, search);
            std::vector<Sign> signs;
#pragma omp for schedule(dynamic, 16)
            for (std::int64_t j = 0; j < count; ++j) {
              classes.signs(base + j, signs);
              status[j] = searcher.solve(signs).status;
            }
          }
        } else {
          for (std::int64_t j = 0; j < count; ++j)
            status[j] = find_signified_hom(classes.representative(base + j), target.graph, search).status;
        }
        for (std::uint64_t j = 0; j < chunk; ++j) {
          if (status[j] == SearchStatus::absent) entry.failures.push_back(base + j);
          if (status[j] == SearchStatus::indeterminate) rep.undecided.push_back(base + j);
        }
        entry.cursor += chunk;
        if (budget) *budget -= chunk;
        upsert(checkpoint, entry);
        if (cfg.checkpoint_path) write_checkpoint(*cfg.checkpoint_path, checkpoint);
      }
      rep.classes_done = entry.cursor;
      rep.failures = entry.failures;

      // Success is a property of the class: re-solve a few randomly
      // resigned representatives and compare.
      if (class_invariant && rep.complete() && rep.undecided.empty()) {
        std::mt19937_64 rng(cfg.seed ^ (0x9e3779b97f4a7c15ULL * (gi + 1)));
        std::uniform_int_distribution<std::uint64_t> pick(0, rep.classes_total - 1);
        const int samples = static_cast<int>(std::min<std::uint64_t>(cfg.consistency_samples, rep.classes_total));
        for (int s = 0; s < samples; ++s) {
          const std::uint64_t idx = pick(rng);
          std::vector<Vertex> x;
          for (Vertex v = 0; v < host.order(); ++v)
            if (rng() & 1) x.push_back(v);
          const auto r = find_signified_hom(resign(classes.representative(idx), x), target.graph, search);
          if (r.status == SearchStatus::indeterminate) continue;
          const bool failed = std::binary_search(rep.failures.begin(), rep.failures.end(), idx);
          ++rep.consistency_checked;
          if ((r.status == SearchStatus::absent) != failed) ++rep.consistency_mismatches;
        }
      }
    } catch (const std::exception& e) {
      rep.error = e.what();
    }
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (sink) sink(rep);
    reports.push_back(std::move(rep));
    if (budget && *budget == 0) break;
  }
  return reports;
}

std::vector<CampaignReport> run_campaign(std::span<const std::uint8_t> stream, const LabelledTarget& target,
                                         const CampaignConfig& cfg, const ReportSink& sink) {
  std::vector<EmbeddedGraph> graphs;
  try {
    graphs = read_planar_code(stream);
  } catch (const ParseError& e) {
    CampaignReport rep;
    rep.error = e.what();
    if (sink) sink(rep);
    return {rep};
  }
  return run_campaign(graphs, target, cfg, sink);
}

}  // namespace signhom
