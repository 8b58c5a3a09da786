#include <doctest.h>

#include "minorlab/graph.hpp"
#include "minorlab/io.hpp"

using namespace minorlab;

namespace {

bool same_graph(const Graph& a, const Graph& b) {
  return a.n == b.n && a.edges() == b.edges();
}

}  // namespace

TEST_CASE("json round trip") {
  for (const Graph& g : {make_grid(3, 4), make_cycle(5), make_wheel(6),
                         make_twisted_prism({8, {3, 5, 2, 1, 8, 7, 4, 6}})}) {
    CHECK(same_graph(graph_from_json(graph_to_json(g)), g));
  }
}

TEST_CASE("json edges sorted and labels round trip") {
  Graph g = make_grid(2, 2);
  auto j = graph_to_json(g);
  CHECK(j["n"] == 4);
  auto edges = j["edges"];
  for (size_t i = 1; i < edges.size(); i++) CHECK(edges[i - 1] < edges[i]);
  Graph back = graph_from_json(j);
  CHECK(back.labels == g.labels);
}

TEST_CASE("dimacs round trip and header") {
  Graph g = make_grid(4, 4);
  std::string text = graph_to_dimacs(g);
  CHECK(text.substr(0, 12) == "p edge 16 24");
  CHECK(same_graph(graph_from_dimacs(text), g));
  Graph c = graph_from_dimacs("p edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(c.n == 3);
  CHECK(c.has_edge(0, 1));
  CHECK(c.has_edge(1, 2));
}

TEST_CASE("dimacs error paths") {
  CHECK_THROWS(graph_from_dimacs("no header here"));
  CHECK_THROWS(graph_from_dimacs("p edge 2 1\ne 1 5\n"));  // out of range
}

TEST_CASE("content dispatch") {
  Graph g = make_cycle(4);
  CHECK(same_graph(graph_from_text(graph_to_dimacs(g)), g));
  CHECK(same_graph(graph_from_text(graph_to_json(g).dump()), g));
}

TEST_CASE("dot output mentions every vertex") {
  Graph g = make_grid(2, 2);
  std::string dot = graph_to_dot(g);
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("0,0") != std::string::npos);  // grid coordinate label
  CHECK(dot.find("--") != std::string::npos);
}
