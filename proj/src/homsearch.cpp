#include "signhom/homsearch.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace signhom {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Clock::time_point> deadline_for(const SearchConfig& cfg) {
  if (cfg.time_limit.count() <= 0) return std::nullopt;
  return Clock::now() + cfg.time_limit;
}

// Budget shared by one top-level call; checked every 4096 nodes.
struct Budget {
  std::uint64_t node_limit = 0;
  std::optional<Clock::time_point> deadline;

  bool exceeded(std::uint64_t nodes) const {
    if (node_limit && nodes >= node_limit) return true;
    if (deadline && (nodes & 4095) == 0 && Clock::now() >= *deadline) return true;
    return false;
  }
};

// rank[v] = 0 for the vertex removed last by the min-degree peeling.
std::vector<int> degeneracy_rank(const SignifiedGraph& g) {
  const int n = g.order();
  std::vector<int> deg(n), rank(n);
  std::vector<bool> removed(n, false);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    removed[best] = true;
    rank[best] = n - 1 - step;
    for (Vertex w : g.neighbors(best))
      if (!removed[w]) --deg[w];
  }
  return rank;
}

}  // namespace

std::vector<Vertex> search_order(const SignifiedGraph& g, VariableOrder order) {
  const int n = g.order();
  std::vector<Vertex> out;
  out.reserve(n);
  if (order == VariableOrder::natural) {
    for (Vertex v = 0; v < n; ++v) out.push_back(v);
    return out;
  }
  const auto rank = degeneracy_rank(g);
  std::vector<bool> placed(n, false);
  std::vector<int> placed_nbrs(n, 0);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v] || placed_nbrs[v] == 0) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      const bool better = order == VariableOrder::max_constrained
                              ? (placed_nbrs[v] > placed_nbrs[best] ||
                                 (placed_nbrs[v] == placed_nbrs[best] && rank[v] < rank[best]))
                              : rank[v] < rank[best];
      if (better) best = v;
    }
    if (best < 0) {
      // New component: best-ranked unplaced vertex.
      for (Vertex v = 0; v < n; ++v)
        if (!placed[v] && (best < 0 || rank[v] < rank[best])) best = v;
    }
    placed[best] = true;
    out.push_back(best);
    for (Vertex w : g.neighbors(best)) ++placed_nbrs[w];
  }
  return out;
}

CompiledTarget::CompiledTarget(const SignifiedGraph& h)
    : n_(h.order()), words_(std::max(1, (h.order() + 63) / 64)), graph_(h) {
  pos_.assign(static_cast<std::size_t>(n_) * words_, 0);
  neg_.assign(static_cast<std::size_t>(n_) * words_, 0);
  for (const auto& e : h.edges()) {
    auto& rows = e.sign == Sign::positive ? pos_ : neg_;
    rows[static_cast<std::size_t>(e.u) * words_ + (e.v >> 6)] |= std::uint64_t{1} << (e.v & 63);
    rows[static_cast<std::size_t>(e.v) * words_ + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
  }
}

std::optional<std::pair<Vertex, Vertex>> CompiledTarget::arc_representative(Sign s) const {
  for (Vertex b = 1; b < n_; ++b)
    if (graph_.sign(0, b) == s) return std::pair{0, b};
  return std::nullopt;
}

std::optional<std::array<Vertex, 3>> CompiledTarget::triangle_representative(Sign ab, Sign ac, Sign bc) const {
  for (Vertex b = 1; b < n_; ++b) {
    if (graph_.sign(0, b) != ab) continue;
    for (Vertex c = 1; c < n_; ++c)
      if (c != b && graph_.sign(0, c) == ac && graph_.sign(b, c) == bc) return std::array{0, b, c};
  }
  return std::nullopt;
}

HomSearcher::HomSearcher(const SignifiedGraph& host, std::shared_ptr<const CompiledTarget> target, SearchConfig cfg)
    : n_(host.order()), target_(std::move(target)), cfg_(cfg), edges_(host.edges()) {
  order_ = search_order(host, cfg_.order);
  std::vector<int> pos_of(n_);
  for (int p = 0; p < n_; ++p) pos_of[order_[p]] = p;
  back_.assign(n_, {});
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const int pu = pos_of[edges_[e].u], pv = pos_of[edges_[e].v];
    back_[std::max(pu, pv)].push_back({std::min(pu, pv), e});
  }
  component_start_.assign(n_, false);
  for (int p = 0; p < n_; ++p) component_start_[p] = cfg_.order == VariableOrder::natural ? p == 0 : back_[p].empty();
  if (cfg_.order == VariableOrder::natural) {
    const auto comp = components(host);
    for (int p = 0; p < n_; ++p) component_start_[p] = std::none_of(order_.begin(), order_.begin() + p, [&](Vertex w) {
      return comp[w] == comp[order_[p]];
    });
  }
  if (cfg_.symmetry && n_ >= 2 && host.adjacent(order_[0], order_[1])) {
    pin_arc_ = cfg_.target_symmetry == TargetSymmetry::arc_transitive ||
               cfg_.target_symmetry == TargetSymmetry::triangle_transitive;
    pin_triangle_ = cfg_.target_symmetry == TargetSymmetry::triangle_transitive && n_ >= 3 &&
                    host.adjacent(order_[0], order_[2]) && host.adjacent(order_[1], order_[2]);
  }
  cand_.assign(static_cast<std::size_t>(std::max(n_, 1)) * target_->words(), 0);
  image_.assign(n_, -1);
}

HomResult HomSearcher::solve(const SignifiedGraph& g) {
  if (g.order() != n_ || g.size() != static_cast<int>(edges_.size()))
    throw std::invalid_argument("HomSearcher: graph does not match host topology");
  std::vector<Sign> signs(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    signs[e] = g.sign(edges_[e].u, edges_[e].v);
    if (signs[e] == Sign::none) throw std::invalid_argument("HomSearcher: graph does not match host topology");
  }
  return solve(signs);
}

HomResult HomSearcher::solve(std::span<const Sign> edge_signs) {
  HomResult result;
  if (n_ == 0) {
    result.status = SearchStatus::found;
    return result;
  }
  const int words = target_->words();
  const int tn = target_->order();
  if (tn == 0) {
    result.status = SearchStatus::absent;
    return result;
  }
  const Budget budget{cfg_.node_limit, deadline_for(cfg_)};

  // Pinned images for the first positions, -1 when free.
  std::array<Vertex, 3> pin{-1, -1, -1};
  const bool vertex_pin = cfg_.symmetry && cfg_.target_symmetry != TargetSymmetry::none;
  auto edge_sign_between = [&](int p, int q) {
    for (const auto& b : back_[std::max(p, q)])
      if (b.pos == std::min(p, q)) return edge_signs[b.edge];
    return Sign::none;
  };
  if (pin_triangle_) {
    const auto t = target_->triangle_representative(edge_sign_between(0, 1), edge_sign_between(0, 2),
                                                    edge_sign_between(1, 2));
    if (!t) {
      result.status = SearchStatus::absent;
      return result;
    }
    pin = *t;
  } else if (pin_arc_) {
    const auto a = target_->arc_representative(edge_sign_between(0, 1));
    if (!a) {
      result.status = SearchStatus::absent;
      return result;
    }
    pin = {a->first, a->second, -1};
  } else if (vertex_pin) {
    pin[0] = 0;
  }

  auto init = [&](int p) {
    std::uint64_t* c = cand_.data() + static_cast<std::size_t>(p) * words;
    const Vertex pinned = p < 3 ? pin[p] : -1;
    if (pinned >= 0 || (vertex_pin && component_start_[p])) {
      std::fill(c, c + words, 0);
      const Vertex v = pinned >= 0 ? pinned : 0;
      c[v >> 6] |= std::uint64_t{1} << (v & 63);
    } else {
      std::fill(c, c + words, ~std::uint64_t{0});
      if (tn % 64) c[words - 1] = (std::uint64_t{1} << (tn % 64)) - 1;
    }
    for (const auto& b : back_[p]) {
      const std::uint64_t* r = target_->row(image_[order_[b.pos]], edge_signs[b.edge]);
      for (int w = 0; w < words; ++w) c[w] &= r[w];
    }
  };

  int p = 0;
  init(0);
  while (true) {
    std::uint64_t* c = cand_.data() + static_cast<std::size_t>(p) * words;
    int w = 0;
    while (w < words && c[w] == 0) ++w;
    if (w == words) {
      if (--p < 0) {
        result.status = SearchStatus::absent;
        return result;
      }
      continue;
    }
    const int bit = std::countr_zero(c[w]);
    c[w] &= c[w] - 1;
    image_[order_[p]] = w * 64 + bit;
    ++result.nodes;
    if (p == n_ - 1) {
      result.status = SearchStatus::found;
      result.map = image_;
      return result;
    }
    if (budget.exceeded(result.nodes)) {
      result.status = SearchStatus::indeterminate;
      return result;
    }
    init(++p);
  }
}

HomResult find_signified_hom(const SignifiedGraph& g, const SignifiedGraph& h, const SearchConfig& cfg) {
  HomSearcher searcher(g, std::make_shared<CompiledTarget>(h), cfg);
  return searcher.solve(g);
}

HomResult find_signified_hom(const SignifiedGraph& g, const LabelledTarget& h, SearchConfig cfg) {
  if (cfg.symmetry) cfg.target_symmetry = h.symmetry;
  return find_signified_hom(g, h.graph, cfg);
}

SignedHomResult find_signed_hom(const SignifiedGraph& g, const SignifiedGraph& h, const SearchConfig& cfg) {
  SearchConfig inner = cfg;
  inner.symmetry = false;
  const auto at = build_at(h);
  const auto res = find_signified_hom(g, at.graph, inner);
  SignedHomResult out{res.status, {}, {}, res.nodes};
  if (res.status != SearchStatus::found) return out;
  // Vertices landing in copy 1 are resigned and folded back onto copy 0.
  const int n = h.order();
  out.map.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (res.map[v] >= n) out.resign_set.push_back(v);
    out.map[v] = res.map[v] % n;
  }
  return out;
}

namespace {

ColouringResult colouring_search(const SignifiedGraph& g, int k, VariableOrder order, const Budget& budget) {
  ColouringResult result;
  const int n = g.order();
  if (n == 0) {
    result.status = SearchStatus::found;
    return result;
  }
  if (k <= 0) {
    result.status = SearchStatus::absent;
    return result;
  }
  const auto ord = search_order(g, order);
  std::vector<int> pos_of(n);
  for (int p = 0; p < n; ++p) pos_of[ord[p]] = p;
  struct Back {
    int pos;
    Sign sign;
  };
  std::vector<std::vector<Back>> back(n);
  for (const auto& e : g.edges()) {
    const int pu = pos_of[e.u], pv = pos_of[e.v];
    back[std::max(pu, pv)].push_back({std::min(pu, pv), e.sign});
  }

  std::vector<int> colour(n, -1), next(n, 0), max_before(n + 1, -1);
  // Latched sign per colour pair with a reference count.
  std::vector<Sign> latch(static_cast<std::size_t>(k) * k, Sign::none);
  std::vector<int> latch_count(static_cast<std::size_t>(k) * k, 0);

  auto undo = [&](int p) {
    const int c = colour[p];
    for (const auto& b : back[p]) {
      const int d = colour[b.pos];
      if (--latch_count[c * k + d] == 0) {
        latch[c * k + d] = Sign::none;
        latch[d * k + c] = Sign::none;
      }
      latch_count[d * k + c] = latch_count[c * k + d];
    }
    colour[p] = -1;
  };
  auto feasible = [&](int p, int c) {
    const auto& bs = back[p];
    for (std::size_t i = 0; i < bs.size(); ++i) {
      const int d = colour[bs[i].pos];
      if (d == c) return false;
      const Sign l = latch[c * k + d];
      if (l != Sign::none && l != bs[i].sign) return false;
      // Two earlier neighbours sharing a colour must agree on the sign.
      for (std::size_t j = 0; j < i; ++j)
        if (colour[bs[j].pos] == d && bs[j].sign != bs[i].sign) return false;
    }
    return true;
  };

  int p = 0;
  while (true) {
    if (p == n) {
      result.status = SearchStatus::found;
      result.colours.resize(n);
      for (int i = 0; i < n; ++i) result.colours[ord[i]] = colour[i];
      return result;
    }
    if (colour[p] >= 0) undo(p);
    // First-use symmetry breaking: a fresh colour is always the next index.
    const int limit = std::min(k - 1, max_before[p] + 1);
    int c = next[p];
    while (c <= limit && !feasible(p, c)) ++c;
    if (c > limit) {
      next[p] = 0;
      if (--p < 0) {
        result.status = SearchStatus::absent;
        return result;
      }
      continue;
    }
    colour[p] = c;
    for (const auto& b : back[p]) {
      const int d = colour[b.pos];
      latch[c * k + d] = b.sign;
      latch[d * k + c] = b.sign;
      ++latch_count[c * k + d];
      latch_count[d * k + c] = latch_count[c * k + d];
    }
    next[p] = c + 1;
    max_before[p + 1] = std::max(max_before[p], c);
    ++result.nodes;
    if (budget.exceeded(result.nodes)) {
      result.status = SearchStatus::indeterminate;
      return result;
    }
    ++p;
    if (p < n) next[p] = 0;
  }
}

}  // namespace

ColouringResult signified_colouring(const SignifiedGraph& g, int k, const SearchConfig& cfg) {
  return colouring_search(g, k, cfg.order, Budget{cfg.node_limit, deadline_for(cfg)});
}

SignifiedGraph quotient_graph(const SignifiedGraph& g, std::span<const Vertex> colours, int k) {
  SignifiedGraph q(k);
  for (const auto& e : g.edges()) {
    const Vertex a = colours[e.u], b = colours[e.v];
    if (a == b) throw std::invalid_argument("quotient_graph: improper colouring");
    const Sign cur = q.sign(a, b);
    if (cur != Sign::none && cur != e.sign) throw std::invalid_argument("quotient_graph: colour pair with both signs");
    q.set_edge(a, b, e.sign);
  }
  return q;
}

namespace {

// Smallest k >= start admitting a colouring of any of the graphs produced by
// `variants`; all budgets share one deadline.
template <class Variants>
ChromaticResult chromatic_search(const SignifiedGraph& g, const SearchConfig& cfg, std::uint64_t variant_count,
                                 Variants&& variant) {
  ChromaticResult out;
  const int n = g.order();
  if (n == 0) {
    out.status = SearchStatus::found;
    out.exhausted = true;
    return out;
  }
  const auto deadline = deadline_for(cfg);
  bool all_refuted = true;
  for (int k = 1; k <= n; ++k) {
    bool undecided = false;
    for (std::uint64_t i = 0; i < variant_count; ++i) {
      const auto [graph, resigned] = variant(i);
      const Budget budget{cfg.node_limit, deadline};
      const auto r = colouring_search(graph, k, cfg.order, budget);
      out.nodes += r.nodes;
      if (r.status == SearchStatus::found) {
        out.value = k;
        out.witness_map = r.colours;
        out.witness_target = quotient_graph(graph, r.colours, k);
        out.resign_set = resigned;
        out.exhausted = all_refuted;
        out.status = all_refuted ? SearchStatus::found : SearchStatus::indeterminate;
        if (all_refuted) out.lower_bound = k;
        return out;
      }
      if (r.status == SearchStatus::indeterminate) undecided = true;
      if (deadline && Clock::now() >= *deadline) undecided = true;
    }
    if (undecided && all_refuted) {
      all_refuted = false;
      out.lower_bound = k;
    }
    if (!undecided && all_refuted) out.lower_bound = k + 1;
  }
  // n colours always suffice, so getting here means every k ran out of budget.
  out.status = SearchStatus::indeterminate;
  return out;
}

}  // namespace

ChromaticResult chi2_exact(const SignifiedGraph& g, const SearchConfig& cfg) {
  return chromatic_search(g, cfg, 1, [&](std::uint64_t) { return std::pair{g, std::vector<Vertex>{}}; });
}

ChromaticResult chis_exact(const SignifiedGraph& g, const SearchConfig& cfg) {
  // Resigning a component root's side is redundant: X and its complement
  // within a component give the same signature.
  const auto comp = components(g);
  std::vector<Vertex> free;
  std::vector<bool> root_seen;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (comp[v] >= static_cast<int>(root_seen.size())) root_seen.resize(comp[v] + 1, false);
    if (!root_seen[comp[v]]) {
      root_seen[comp[v]] = true;
      continue;
    }
    free.push_back(v);
  }
  if (free.size() > 24) throw std::invalid_argument("chis_exact: too many resignings to enumerate");
  return chromatic_search(g, cfg, std::uint64_t{1} << free.size(), [&](std::uint64_t mask) {
    std::vector<Vertex> x;
    for (std::size_t i = 0; i < free.size(); ++i)
      if ((mask >> i) & 1) x.push_back(free[i]);
    return std::pair{resign(g, x), x};
  });
}

}  // namespace signhom
