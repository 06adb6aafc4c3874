#include "signhom/iso.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

namespace signhom {

namespace {

// Ordered partition stored as a cell index per vertex; cells are numbered
// 0..c-1 in order.
using Cells = std::vector<int>;

int cell_count(const Cells& cells) { return cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()) + 1; }

// Equitable refinement. New cells are ordered by (old cell, neighbourhood
// profile), which depends only on the partition, not on vertex names.
Cells refine(const SignifiedGraph& g, Cells cells) {
  const int n = g.order();
  int count = cell_count(cells);
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> profile;
      for (Vertex w = 0; w < n; ++w) {
        const Sign s = g.sign(v, w);
        if (s != Sign::none) profile.push_back(2 * cells[w] + (s == Sign::negative));
      }
      std::sort(profile.begin(), profile.end());
      sig[v] = {cells[v], std::move(profile)};
    }
    std::vector<decltype(sig)::value_type> distinct(sig.begin(), sig.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Cells next(n);
    for (Vertex v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    const int next_count = static_cast<int>(distinct.size());
    cells = std::move(next);
    if (next_count == count) return cells;
    count = next_count;
  }
}

std::string code_for(const SignifiedGraph& g, const Mapping& position) {
  const int n = g.order();
  Mapping at(n);
  for (Vertex v = 0; v < n; ++v) at[position[v]] = v;
  std::string code;
  code.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Sign s = g.sign(at[i], at[j]);
      code.push_back(s == Sign::none ? '0' : (s == Sign::positive ? '+' : '-'));
    }
  return code;
}

void search(const SignifiedGraph& g, const Cells& cells, CanonicalForm& best) {
  const int n = g.order();
  const int count = cell_count(cells);
  if (count == n) {
    std::string code = code_for(g, cells);
    if (best.code.empty() || code < best.code) {
      best.code = std::move(code);
      best.labelling = cells;
    }
    return;
  }
  // Target cell: the first non-singleton one.
  std::vector<int> size(count, 0);
  for (int c : cells) ++size[c];
  const int target = static_cast<int>(std::find_if(size.begin(), size.end(), [](int s) { return s > 1; }) - size.begin());
  for (Vertex v = 0; v < n; ++v) {
    if (cells[v] != target) continue;
    Cells split = cells;
    for (Vertex w = 0; w < n; ++w)
      if (split[w] > target || (split[w] == target && w != v)) ++split[w];
    search(g, refine(g, std::move(split)), best);
  }
}

}  // namespace

CanonicalForm canonical_form(const SignifiedGraph& g) {
  CanonicalForm best;
  if (g.order() == 0) return best;
  search(g, refine(g, Cells(g.order(), 0)), best);
  return best;
}

std::optional<Mapping> signified_iso(const SignifiedGraph& g, const SignifiedGraph& h,
                                     std::optional<std::pair<Vertex, Vertex>> pin) {
  const int n = g.order();
  if (h.order() != n || g.size() != h.size()) return std::nullopt;
  auto invariant = [](const SignifiedGraph& x, Vertex v) {
    return std::pair{x.degree(v, Sign::positive), x.degree(v, Sign::negative)};
  };
  {
    std::vector<std::pair<int, int>> a, b;
    for (Vertex v = 0; v < n; ++v) {
      a.push_back(invariant(g, v));
      b.push_back(invariant(h, v));
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  if (pin && invariant(g, pin->first) != invariant(h, pin->second)) return std::nullopt;

  // Connected-first order: BFS from the pinned vertex or the highest degree.
  std::vector<Vertex> order;
  std::vector<bool> seen(n, false);
  auto bfs = [&](Vertex root) {
    std::size_t head = order.size();
    order.push_back(root);
    seen[root] = true;
    while (head < order.size()) {
      const Vertex v = order[head++];
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
    }
  };
  if (pin) bfs(pin->first);
  while (static_cast<int>(order.size()) < n) {
    Vertex root = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!seen[v] && (root < 0 || g.degree(v) > g.degree(root))) root = v;
    bfs(root);
  }

  Mapping map(n, -1);
  std::vector<bool> used(n, false);
  auto consistent = [&](int depth, Vertex image) {
    const Vertex v = order[depth];
    if (used[image] || invariant(g, v) != invariant(h, image)) return false;
    for (int i = 0; i < depth; ++i)
      if (g.sign(v, order[i]) != h.sign(image, map[order[i]])) return false;
    return true;
  };
  std::function<bool(int)> rec = [&](int depth) {
    if (depth == n) return true;
    const Vertex v = order[depth];
    for (Vertex image = 0; image < n; ++image) {
      if (depth == 0 && pin && image != pin->second) continue;
      if (!consistent(depth, image)) continue;
      map[v] = image;
      used[image] = true;
      if (rec(depth + 1)) return true;
      used[image] = false;
      map[v] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

bool vertex_transitive_by_search(const SignifiedGraph& h) {
  if (h.order() > 20) throw std::invalid_argument("vertex_transitive_by_search supports at most 20 vertices");
  for (Vertex v = 0; v < h.order(); ++v)
    if (!signified_iso(h, h, std::pair{Vertex{0}, v})) return false;
  return true;
}

}  // namespace signhom
