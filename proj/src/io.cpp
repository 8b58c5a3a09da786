#include "minorlab/io.hpp"

#include <sstream>
#include <stdexcept>

namespace minorlab {

using nlohmann::json;

json graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.n;
  j["edges"] = json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (!g.labels.empty()) j["labels"] = g.labels;
  return j;
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph json: need object with \"n\" and \"edges\"");
  int n = j.at("n").get<int>();
  if (n < 0) throw std::invalid_argument("graph json: negative n");
  Graph g(n);
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph json: edge must be a pair");
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw std::invalid_argument("graph json: bad edge endpoint");
    if (!g.has_edge(u, v)) g.add_edge(u, v);
  }
  if (j.contains("labels")) {
    auto ls = j.at("labels").get<std::vector<std::string>>();
    if (static_cast<int>(ls.size()) != n)
      throw std::invalid_argument("graph json: labels length mismatch");
    g.labels = ls;
  }
  return g;
}

std::string graph_to_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.n << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << " " << v + 1 << "\n";
  return os.str();
}

Graph graph_from_dimacs(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n = -1;
  long m = -1, edges_seen = 0;
  Graph g;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string fmt;
      ls >> fmt >> n >> m;
      if (fmt != "edge" && fmt != "col")
        throw std::invalid_argument("dimacs: unsupported format line");
      if (!ls || n < 0 || m < 0) throw std::invalid_argument("dimacs: bad p line");
      g = Graph(n);
    } else if (tag == "e") {
      if (n < 0) throw std::invalid_argument("dimacs: e line before p line");
      int u, v;
      ls >> u >> v;
      if (!ls || u < 1 || v < 1 || u > n || v > n || u == v)
        throw std::invalid_argument("dimacs: bad edge line");
      if (!g.has_edge(u - 1, v - 1)) g.add_edge(u - 1, v - 1);
      ++edges_seen;
    } else if (!tag.empty()) {
      throw std::invalid_argument("dimacs: unknown line tag '" + tag + "'");
    }
  }
  if (n < 0) throw std::invalid_argument("dimacs: missing p line");
  if (edges_seen != m) throw std::invalid_argument("dimacs: edge count mismatch");
  return g;
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph g {\n";
  for (int v = 0; v < g.n; ++v) {
    os << "  " << v;
    if (!g.labels.empty() && !g.labels[v].empty()) os << " [label=\"" << g.labels[v] << "\"]";
    os << ";\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

Graph graph_from_text(const std::string& text) {
  if (text.find("p edge") != std::string::npos || text.find("p col") != std::string::npos)
    return graph_from_dimacs(text);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("graph parse: not DIMACS and not JSON: ") + e.what());
  }
  return graph_from_json(j);
}

}  // namespace minorlab
