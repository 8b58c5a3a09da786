#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace minorlab {

// Bit-addressable vertex set.  Cheap for n <= 64 (single word) and still
// fine for a few hundred vertices (vector of words).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int capacity() const { return n_; }

  bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
  void set(int v) { w_[v >> 6] |= 1ULL << (v & 63); }
  void reset(int v) { w_[v >> 6] &= ~(1ULL << (v & 63)); }
  void clear() { for (auto& x : w_) x = 0; }

  int count() const;
  bool any() const;
  bool none() const { return !any(); }

  bool intersects(const VertexSet& o) const;
  bool is_subset_of(const VertexSet& o) const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& subtract(const VertexSet& o);

  // -1 when exhausted.
  int first() const { return next(-1); }
  int next(int after) const;

  std::vector<int> to_vector() const;
  static VertexSet of(int n, const std::vector<int>& vs);

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

// Simple undirected graph, no parallel edges, no loops.
struct Graph {
  int n = 0;
  std::vector<VertexSet> adj;
  std::vector<std::string> labels;  // optional; empty or size n

  Graph() = default;
  explicit Graph(int n_);

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const { return u != v && adj[u].test(v); }
  int degree(int v) const { return adj[v].count(); }
  long edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
  std::vector<int> neighbors(int v) const { return adj[v].to_vector(); }

  // Adjacency row as a single word; requires n <= 64.
  uint64_t adj_mask(int v) const;
};

// ---- generators ----

Graph make_grid(int rows, int cols);            // labels "r,c", id = r*cols + c
Graph make_cycle(int n);                        // n >= 3
Graph make_path(int n);                         // n >= 1
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_wheel(int k);                        // k-wheel: hub + cycle of length k-1, k >= 4

// Twisted prism: cycles v_1..v_l and w_1..w_l plus matching v_i -- w_{pi(i)}.
// pi is 1-indexed: pi[i-1] = pi(i).  v_i has id i-1, w_j has id l + j - 1.
struct TwistedPrismSpec {
  int l = 0;
  std::vector<int> pi;
};
Graph make_twisted_prism(const TwistedPrismSpec& spec);
std::vector<int> identity_permutation(int l);

// ---- operations ----

Graph disjoint_union(const Graph& a, const Graph& b);

// Each edge (u,v) with u < v must appear as a key; value = number of internal
// vertices inserted on that edge (0 keeps the edge).
Graph subdivide(const Graph& g, const std::map<std::pair<int, int>, int>& counts);

std::optional<int> girth(const Graph& g);  // nullopt when acyclic

// Contract edge (u,v) into min(u,v); vertices above max(u,v) shift down by one.
Graph contract_edge(const Graph& g, int u, int v);

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

bool is_connected(const Graph& g);
bool is_connected_subset(const Graph& g, const VertexSet& s);

// ---- isomorphism and enumeration ----

// Lexicographically minimal upper-triangle adjacency bitstring, packed into
// words.  Intended for n <= 8 (pruned permutation search).
std::vector<uint64_t> canonical_key(const Graph& g);

// Backtracking isomorphism test with degree pruning; fine for sparse graphs
// up to a few dozen vertices.
bool is_isomorphic(const Graph& a, const Graph& b);

// All isomorphism classes of simple graphs on exactly n vertices, 1 <= n <= 8.
// Deterministic order.  Results are memoized; the returned reference stays
// valid for the lifetime of the process.
const std::vector<Graph>& enumerate_graphs(int n);

}  // namespace minorlab
