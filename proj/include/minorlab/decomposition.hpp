#pragma once

#include <string>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> tree_edges;

  int width() const;  // max bag size - 1; -1 when there are no bags
};

struct PathDecomposition {
  std::vector<std::vector<int>> bags;  // in path order

  int width() const;
};

struct ValidationResult {
  bool valid = false;
  int width = -1;
  std::string reason;  // set when invalid
};

ValidationResult validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);
ValidationResult validate_path_decomposition(const Graph& g, const PathDecomposition& pd);

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
};

struct PathwidthResult {
  int width = -1;
  PathDecomposition decomposition;
};

// Exact treewidth via dynamic programming over elimination prefixes.
// Cap: n <= 25.  The empty graph has width -1 and an empty decomposition.
TreewidthResult exact_treewidth(const Graph& g);

// Exact pathwidth via the vertex-separation formulation.  Cap: n <= 20.
PathwidthResult exact_pathwidth(const Graph& g);

struct TreewidthBounds {
  int lower = 0;
  int upper = -1;
  TreeDecomposition upper_witness;
};

// Polynomial bounds: lower = max(degeneracy, contraction min-degree),
// upper = min-fill elimination.
TreewidthBounds treewidth_bounds_heuristic(const Graph& g);

}  // namespace minorlab
