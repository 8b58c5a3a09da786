#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "minorlab/graph.hpp"
#include "minorlab/minor.hpp"

namespace minorlab {

struct MonotoneResult {
  bool increasing = false;
  std::vector<int> indices;  // positions into the input sequence, ascending
};

// Either an increasing subsequence of length a or a decreasing one of length
// b; the input must have length at least (a-1)*(b-1)+1.  Distinct values
// required.
MonotoneResult es_monotone(const std::vector<int>& seq, int a, int b);

// Hamiltonian cycle of the a x b grid (vertex ids of make_grid(a,b)).  When
// both sides are odd no such cycle exists; with allow_corner_skip the cycle
// omits one corner and has length a*b-1.
std::vector<int> grid_hamiltonian_cycle(int a, int b, bool allow_corner_skip = false);

// Two vertex-disjoint cycles of lengths > l1 and > l2 inside the g x g grid,
// stacked as horizontal bands.  Requires g >= ceil(l1/g) + ceil(l2/g) + 2.
std::pair<std::vector<int>, std::vector<int>> grid_band_cycles(int g, int l1, int l2);

// Model of the (8r^2-4r)-prism (twisted prism with identity matching) in the
// 4r x 4r grid: two nested snaking cycles joined by contracted rungs.
MinorModel grid_prism_model(int r);
int grid_prism_length(int r);  // 8r^2 - 4r

// Model of the 4x4 grid in the twisted l-prism, l >= 75, any permutation.
MinorModel twisted_prism_grid_model(const TwistedPrismSpec& spec);

// Intermediate shapes used by twisted_prism_grid_model, exposed for tests:
// the pinched 10-prism frame (two subdivided cycle edges whose opposite
// matched pairs are merged), the padded 11-rung circular ladder (one extra
// subdivision vertex on each cycle; the inner one sits on the edge given by
// offset, the outer one on edge 0), and fixed 4x4 grid models in both.
Graph grid_embedding_frame();
Graph padded_ladder_host(int offset);
MinorModel grid4_in_padded_ladder_model(int offset);
MinorModel grid4_in_frame_model();

// Scale a minor model of h inside the g x g grid to a model of
// subdivide(h, counts) inside the (ceil(2*sqrt(l))*g)-sided grid, where l
// exceeds every subdivision count.
struct SubdivisionGridResult {
  Graph subdivided_h;
  int grid_side = 0;
  MinorModel model;
};
SubdivisionGridResult subdivision_grid_model(const Graph& h, const MinorModel& h_in_grid,
                                             int g, const std::map<std::pair<int, int>, int>& counts,
                                             int l);

// Maximum number of vertex-disjoint cycles, with witness cycles.
// Cap: g.n <= 25.
struct CyclePackingResult {
  int count = 0;
  std::vector<std::vector<int>> cycles;
};
CyclePackingResult cycle_packing_exact(const Graph& g);

// Minimum feedback vertex set.  Cap: g.n <= 25.
struct CycleTransversalResult {
  int size = 0;
  std::vector<int> vertices;
};
CycleTransversalResult cycle_transversal_exact(const Graph& g);

}  // namespace minorlab
