#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

// A bramble: connected vertex sets that pairwise touch (intersect or are
// joined by an edge).
struct Bramble {
  std::vector<std::vector<int>> elements;
};

struct BrambleValidation {
  bool valid = false;
  std::string reason;
};

BrambleValidation validate_bramble(const Graph& g, const Bramble& b);

struct BrambleOrderResult {
  int order = 0;
  std::vector<int> hitting_set;  // minimum set meeting every element
};

// Exact minimum hitting set by branch and bound.  Cap: g.n <= 30.
BrambleOrderResult bramble_order(const Graph& g, const Bramble& b);

// The standard order-(k+1) bramble of the k x k grid: crosses (row i union
// column j of the bottom-right (k-1)x(k-1) subgrid) plus the top row and the
// left column remainders.
Bramble grid_cross_bramble(int k);

// Smallest-first search for a cycle whose vertex set meets every element.
// Cap: g.n <= 20.  nullopt when no such cycle exists.
std::optional<std::vector<int>> find_hitting_cycle(const Graph& g, const Bramble& b);

struct PathPartitionResult {
  std::vector<int> p1;               // prefix, starts at the scan endpoint
  std::vector<int> p2;               // rest; shares exactly its first vertex with p1
  int order_b1 = 0;                  // == c1
  std::vector<int> b1_indices;       // elements meeting V(p1)
  std::vector<int> b1_prime_indices; // elements meeting V(p1) - V(p2)
};

// Splits a path that meets every bramble element into edge-disjoint halves
// so that the elements met by the first half form a sub-bramble of order
// exactly c1.  Preconditions: p is a path of g, V(p) hits every element of b,
// and order(b) >= c1 + c2.  scan_from_end selects the scan endpoint.
PathPartitionResult path_partition(const Graph& g, const Bramble& b,
                                   const std::vector<int>& p, int c1, int c2,
                                   bool scan_from_end = false);

}  // namespace minorlab
