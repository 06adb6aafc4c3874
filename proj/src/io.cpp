#include "signhom/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace signhom {

nlohmann::json graph_to_json(const SignifiedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, to_int(e.sign)});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

SignifiedGraph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("graph JSON must be an object");
  for (const auto& [key, value] : doc.items())
    if (key != "n" && key != "edges") throw std::invalid_argument("unknown key in graph JSON: " + key);
  if (!doc.contains("n") || !doc["n"].is_number_integer()) throw std::invalid_argument("graph JSON needs integer \"n\"");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw std::invalid_argument("graph JSON needs array \"edges\"");
  const auto n = doc["n"].get<long long>();
  if (n < 0 || n > 100000) throw std::invalid_argument("vertex count out of range");
  SignifiedGraph g(static_cast<int>(n));
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        !e[2].is_number_integer())
      throw std::invalid_argument("each edge must be [u, v, s] with integers");
    const auto u = e[0].get<long long>(), v = e[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), sign_from_int(e[2].get<int>()));
  }
  return g;
}

SignifiedGraph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + err.what());
  }
  return graph_from_json(doc);
}

SignifiedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph_json(ss.str());
}

std::string graph_to_dot(const SignifiedGraph& g, const std::vector<std::string>& labels, std::string_view name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (static_cast<int>(labels.size()) == g.order()) out << " [label=\"" << labels[v] << "\"]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    out << (e.sign == Sign::negative ? " [style=dashed];\n" : " [style=solid];\n");
  }
  out << "}\n";
  return out.str();
}

}  // namespace signhom
