#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "minorlab/graph.hpp"

using namespace minorlab;

namespace {

long degree_sum(const Graph& g) {
  long s = 0;
  for (int v = 0; v < g.n; v++) s += g.degree(v);
  return s;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; i++) {
    g.add_edge(i, (i + 1) % 5);        // outer pentagon
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);
  }
  return g;
}

}  // namespace

TEST_CASE("grid generator counts") {
  Graph g = make_grid(4, 4);
  CHECK(g.n == 16);
  CHECK(g.edge_count() == 24);
  CHECK(make_grid(1, 1).n == 1);
  CHECK(make_grid(1, 1).edge_count() == 0);
  CHECK(make_grid(2, 3).n == 6);
  CHECK(make_grid(2, 3).edge_count() == 7);
  // coordinate labels
  CHECK(g.labels.at(0) == "0,0");
  CHECK(g.labels.at(5) == "1,1");
}

TEST_CASE("basic generators") {
  CHECK(make_cycle(6).edge_count() == 6);
  CHECK(make_path(5).edge_count() == 4);
  CHECK(make_complete(5).edge_count() == 10);
  CHECK(make_complete_bipartite(2, 3).edge_count() == 6);
  Graph w5 = make_wheel(5);
  CHECK(w5.n == 5);
  CHECK(w5.edge_count() == 8);
  CHECK(make_wheel(6).degree(0) == 5);  // hub
  CHECK(is_isomorphic(make_wheel(4), make_complete(4)));
}

TEST_CASE("handshake identity over generators") {
  for (const Graph& g : {make_grid(3, 5), make_cycle(7), make_wheel(8),
                         make_complete_bipartite(3, 4), petersen()}) {
    CHECK(degree_sum(g) == 2 * g.edge_count());
  }
}

TEST_CASE("twisted prism generator") {
  // identity matching gives the plain prism
  Graph p5 = make_twisted_prism({5, identity_permutation(5)});
  CHECK(p5.n == 10);
  CHECK(p5.edge_count() == 15);
  Graph p3 = make_twisted_prism({3, identity_permutation(3)});
  CHECK(p3.n == 6);
  CHECK(p3.edge_count() == 9);

  Graph t8 = make_twisted_prism({8, {3, 5, 2, 1, 8, 7, 4, 6}});
  CHECK(t8.n == 16);
  CHECK(t8.edge_count() == 24);
  // v_1 (id 0) is matched to w_3 (id 8 + 3 - 1 = 10)
  CHECK(t8.has_edge(0, 10));

  CHECK_THROWS(make_twisted_prism({4, {1, 1, 2, 3}}));  // not a bijection
  CHECK_THROWS(make_twisted_prism({2, {1, 2}}));        // l too small
}

TEST_CASE("identity twisted prisms are prisms") {
  for (int l = 3; l <= 12; l++) {
    Graph tp = make_twisted_prism({l, identity_permutation(l)});
    Graph prism(2 * l);
    for (int i = 0; i < l; i++) {
      prism.add_edge(i, (i + 1) % l);
      prism.add_edge(l + i, l + (i + 1) % l);
      prism.add_edge(i, l + i);
    }
    CHECK(is_isomorphic(tp, prism));
  }
}

TEST_CASE("disjoint union") {
  Graph u = disjoint_union(make_cycle(3), make_cycle(3));
  CHECK(u.n == 6);
  CHECK(u.edge_count() == 6);
  CHECK_FALSE(is_connected(u));
  Graph v = disjoint_union(disjoint_union(make_cycle(4), make_cycle(5)), make_cycle(6));
  CHECK(v.n == 15);
  CHECK(v.edge_count() == 15);
  Graph e;
  CHECK(disjoint_union(e, e).n == 0);
}

TEST_CASE("subdivide") {
  Graph c3 = make_cycle(3);
  std::map<std::pair<int, int>, int> ones, zeros, twos;
  for (auto e : c3.edges()) { ones[e] = 1; zeros[e] = 0; }
  CHECK(is_isomorphic(subdivide(c3, ones), make_cycle(6)));
  CHECK(is_isomorphic(subdivide(c3, zeros), c3));

  Graph k4 = make_complete(4);
  for (auto e : k4.edges()) twos[e] = 2;
  Graph s = subdivide(k4, twos);
  CHECK(s.n == 16);
  CHECK(s.edge_count() == 18);
  CHECK(girth(s).value() == 9);  // girth is monotone under subdivision

  std::map<std::pair<int, int>, int> missing = ones;
  missing.erase(missing.begin()->first);
  CHECK_THROWS(subdivide(c3, missing));
}

TEST_CASE("girth") {
  CHECK(girth(make_cycle(5)).value() == 5);
  CHECK_FALSE(girth(make_path(6)).has_value());
  CHECK(girth(petersen()).value() == 5);
  CHECK(girth(make_grid(3, 3)).value() == 4);
}

TEST_CASE("contract_edge") {
  CHECK(is_isomorphic(contract_edge(make_cycle(4), 0, 1), make_cycle(3)));
  CHECK(is_isomorphic(contract_edge(make_complete(4), 1, 2), make_complete(3)));
  // contracting a rim edge of the 5-wheel gives K4; a spoke leaves the
  // diamond (the merged hub misses the opposite rim chord)
  Graph w5 = make_wheel(5);
  CHECK(is_isomorphic(contract_edge(w5, 1, 2), make_complete(4)));
  Graph spoke = contract_edge(w5, 0, 1);
  CHECK(spoke.n == 4);
  CHECK(spoke.edge_count() == 5);
  CHECK_THROWS(contract_edge(make_path(4), 0, 2));  // not an edge
  Graph c = contract_edge(make_cycle(3), 0, 1);
  CHECK(c.n == 2);
  CHECK_FALSE(c.has_edge(0, 0));
}

TEST_CASE("isomorphism and canonical key") {
  Graph a = make_cycle(6);
  Graph b(6);
  int perm[6] = {2, 4, 0, 5, 1, 3};
  for (auto [u, v] : a.edges()) b.add_edge(perm[u], perm[v]);
  CHECK(is_isomorphic(a, b));
  CHECK(canonical_key(a) == canonical_key(b));
  CHECK_FALSE(is_isomorphic(make_cycle(6), disjoint_union(make_cycle(3), make_cycle(3))));
  CHECK(canonical_key(make_path(4)) != canonical_key(make_cycle(4)));
}

TEST_CASE("enumerate_graphs matches known class counts") {
  const int counts[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; n++) {
    CHECK(static_cast<int>(enumerate_graphs(n).size()) == counts[n - 1]);
  }
  CHECK_THROWS(enumerate_graphs(9));
}

TEST_CASE("enumerate_graphs has no isomorphic duplicates") {
  for (int n = 1; n <= 6; n++) {
    std::set<std::vector<uint64_t>> keys;
    for (const Graph& g : enumerate_graphs(n)) {
      CHECK(g.n == n);
      CHECK(keys.insert(canonical_key(g)).second);
    }
  }
}

TEST_CASE("vertex set basics") {
  VertexSet s(100);
  s.set(3);
  s.set(70);
  CHECK(s.count() == 2);
  CHECK(s.first() == 3);
  CHECK(s.next(3) == 70);
  CHECK(s.next(70) == -1);
  CHECK(s.to_vector() == std::vector<int>{3, 70});
  VertexSet t = VertexSet::of(100, {70, 80});
  CHECK(s.intersects(t));
  s.subtract(t);
  CHECK(s.count() == 1);
}
