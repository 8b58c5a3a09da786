#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

// Branch sets indexed by the vertices of the pattern graph h.
struct MinorModel {
  std::vector<std::vector<int>> branch_sets;
};

struct MinorValidation {
  bool valid = false;
  std::string reason;
};

MinorValidation validate_minor_model(const Graph& g, const Graph& h, const MinorModel& m);

struct MinorSearchCaps {
  int max_h = 10;
  int max_g = 40;
};

// Exhaustive branch-set backtracking.  Returns nullopt when h is not a minor
// of g; throws CapError when the inputs exceed the caps.
std::optional<MinorModel> find_minor_model(const Graph& g, const Graph& h,
                                           const MinorSearchCaps& caps = {});

// Given a model of mid in g and a model of h in mid, produce the model of h
// in g obtained by expanding branch sets.
MinorModel compose_models(const MinorModel& mid_in_g, const MinorModel& h_in_mid);

struct DisjointPathsResult {
  std::vector<std::vector<int>> paths;  // fully vertex-disjoint S-T paths
  std::vector<int> cut;                 // vertex cut of the same size
};

// Menger: maximum family of fully vertex-disjoint S-T paths together with a
// matching vertex cut (cut vertices may lie in S or T).  S and T must be
// disjoint and nonempty.
DisjointPathsResult max_vertex_disjoint_paths(const Graph& g, const std::vector<int>& s,
                                              const std::vector<int>& t);

// Two internally disjoint paths joining the prescribed terminal pairs, or
// nullopt.  Exhaustive; cap: g.n <= 30.
std::optional<std::pair<std::vector<int>, std::vector<int>>> two_disjoint_paths(
    const Graph& g, int s1, int t1, int s2, int t2);

}  // namespace minorlab
