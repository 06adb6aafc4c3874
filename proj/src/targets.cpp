#include "signhom/targets.hpp"

#include <cassert>
#include <charconv>
#include <stdexcept>

namespace signhom {

Vertex LabelledTarget::find(const std::string& text) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i].text == text) return static_cast<Vertex>(i);
  throw std::invalid_argument("no vertex labelled " + text);
}

std::vector<std::string> LabelledTarget::label_texts() const {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(l.text);
  return out;
}

LabelledTarget plain_target(const SignifiedGraph& g) {
  LabelledTarget t{g, {}, TargetSymmetry::none, std::nullopt};
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexLabel l;
    l.text = std::to_string(v);
    t.labels.push_back(std::move(l));
  }
  return t;
}

LabelledTarget build_at(const LabelledTarget& g) {
  const int n = g.graph.order();
  LabelledTarget out{SignifiedGraph(2 * n), {}, TargetSymmetry::none, g.field};
  for (const auto& e : g.graph.edges()) {
    for (int i = 0; i < 2; ++i) {
      out.graph.set_edge(e.u + i * n, e.v + i * n, e.sign);
      out.graph.set_edge(e.u + i * n, e.v + (1 - i) * n, -e.sign);
    }
  }
  for (int i = 0; i < 2; ++i)
    for (Vertex v = 0; v < n; ++v) {
      VertexLabel l = g.labels[v];
      const bool wrap = l.element && l.element->b != 0;
      l.text = (wrap ? "(" + l.text + ")" : l.text) + "_" + std::to_string(i);
      l.copy = i;
      out.labels.push_back(std::move(l));
    }
  return out;
}

LabelledTarget build_at(const SignifiedGraph& g) { return build_at(plain_target(g)); }

SignifiedGraph build_plus(const SignifiedGraph& g) {
  const int n = g.order();
  SignifiedGraph out(n + 1);
  for (const auto& e : g.edges()) out.set_edge(e.u, e.v, e.sign);
  for (Vertex v = 0; v < n; ++v) out.set_edge(v, n, Sign::positive);
  return out;
}

LabelledTarget build_plus(const LabelledTarget& g) {
  LabelledTarget out{build_plus(g.graph), g.labels, TargetSymmetry::none, g.field};
  VertexLabel inf;
  inf.text = "∞";
  inf.infinity = true;
  out.labels.push_back(inf);
  return out;
}

LabelledTarget build_zs(int k) {
  if (k < 2) throw std::invalid_argument("ZS_k needs k >= 2");
  if (k > 12) throw std::invalid_argument("ZS_k supported up to k = 12");
  LabelledTarget out;
  std::vector<std::vector<int>> alphas;
  for (int i = 1; i <= k; ++i) {
    // Free coordinates in lexicographic order, + before -.
    for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
      std::vector<int> alpha(k, 0);
      int bit = k - 2;
      for (int j = 1; j <= k; ++j) {
        if (j == i) continue;
        alpha[j - 1] = (mask >> bit) & 1 ? -1 : 1;
        --bit;
      }
      VertexLabel l;
      l.text = "(" + std::to_string(i) + ";";
      for (int j = 0; j < k; ++j) {
        l.text += alpha[j] == 0 ? "0" : (alpha[j] > 0 ? "+" : "-");
        if (j + 1 < k) l.text += ",";
      }
      l.text += ")";
      l.zs_class = i;
      l.zs_alpha = alpha;
      out.labels.push_back(std::move(l));
    }
  }
  const int n = static_cast<int>(out.labels.size());
  out.graph = SignifiedGraph(n);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      const auto& a = out.labels[x];
      const auto& b = out.labels[y];
      if (a.zs_class == b.zs_class) continue;
      // (i; alpha) -- (j; beta) carries alpha_j * beta_i.
      const int s = a.zs_alpha[b.zs_class - 1] * b.zs_alpha[a.zs_class - 1];
      out.graph.set_edge(x, y, sign_from_int(s));
    }
  return out;
}

LabelledTarget build_sp(int q) {
  const Field f(q);
  LabelledTarget out{SignifiedGraph(q), {}, TargetSymmetry::arc_transitive, f.spec()};
  for (int i = 0; i < q; ++i) {
    VertexLabel l;
    l.text = f.name(f.element(i));
    l.element = f.element(i);
    out.labels.push_back(std::move(l));
  }
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      out.graph.set_edge(i, j, sign_from_int(f.square_sign(f.sub(f.element(j), f.element(i)))));
  return out;
}

Vertex tromp_vertex(const Field& f, std::optional<FieldElem> u, int copy) {
  const int q = f.order();
  return copy * (q + 1) + (u ? f.index(*u) : q);
}

Vertex at_sp_vertex(const Field& f, FieldElem u, int copy) { return copy * f.order() + f.index(u); }

LabelledTarget build_tromp(int q) {
  const Field f(q);
  // Labels and field come from the compositional route; signs are recomputed
  // from the closed forms sq(u-v)(-1)^(i+j) and (-1)^(i+j) below.
  LabelledTarget composed = build_at(build_plus(build_sp(q)));
  LabelledTarget out{SignifiedGraph(2 * q + 2), composed.labels, TargetSymmetry::triangle_transitive, f.spec()};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const int parity = (i + j) % 2 == 0 ? 1 : -1;
      for (const FieldElem& u : f.elements()) {
        out.graph.set_edge(tromp_vertex(f, std::nullopt, i), tromp_vertex(f, u, j), sign_from_int(parity));
        for (const FieldElem& v : f.elements()) {
          if (u == v) continue;
          out.graph.set_edge(tromp_vertex(f, u, i), tromp_vertex(f, v, j),
                             sign_from_int(f.square_sign(f.sub(u, v)) * parity));
        }
      }
    }
  assert(out.graph == composed.graph);
  return out;
}

SignifiedGraph build_k4star() {
  SignifiedGraph g(4);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) g.set_edge(u, v, Sign::positive);
  g.set_edge(0, 1, Sign::negative);
  return g;
}

namespace {

int parse_int_suffix(const std::string& name, std::size_t pos) {
  int value = 0;
  const char* first = name.data() + pos;
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw std::invalid_argument("bad target name " + name);
  return value;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

LabelledTarget build_named_target(const std::string& name) {
  if (name == "k4star") return plain_target(build_k4star());
  if (name == "at-k4star") return build_at(build_k4star());
  if (starts_with(name, "zs-")) return build_zs(parse_int_suffix(name, 3));
  if (starts_with(name, "at-sp-")) return build_at(build_sp(parse_int_suffix(name, 6)));
  if (starts_with(name, "sp-") && name.size() > 5 && name.substr(name.size() - 5) == "-plus") {
    const std::string core = name.substr(0, name.size() - 5);
    return build_plus(build_sp(parse_int_suffix(core, 3)));
  }
  if (starts_with(name, "sp-")) return build_sp(parse_int_suffix(name, 3));
  if (starts_with(name, "tromp-")) return build_tromp(parse_int_suffix(name, 6));
  if (starts_with(name, "tromp")) return build_tromp(parse_int_suffix(name, 5));
  throw std::invalid_argument("unknown target " + name);
}

}  // namespace signhom
