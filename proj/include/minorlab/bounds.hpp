#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "minorlab/graph.hpp"

namespace minorlab {

enum class BoundFamily {
  forest,
  cycle,
  complete_bipartite_2t,
  wheel_RT,
  wheel_ours,
  apex_forest,
  twisted_prism,
  prism_or_grid,
  grid_4x4,
  disjoint_cycles_r2,
  disjoint_cycles_general,
  subdivision_r_edges,
};

std::string bound_family_name(BoundFamily f);
std::optional<BoundFamily> bound_family_from_name(const std::string& name);

// One excluded-minor family with its treewidth upper bound.  Recognized
// parameter keys per family: n (vertex count: forest, cycle, apex_forest,
// disjoint_cycles_r2, disjoint_cycles_general), t (complete_bipartite_2t),
// k (wheels), l (prisms), r (subdivision_r_edges); grid_4x4 takes none.
struct BoundEntry {
  BoundFamily family = BoundFamily::grid_4x4;
  std::map<std::string, long long> params;
  std::string citation;
};

struct BoundValue {
  bool symbolic = false;
  long long value = -1;      // set for numeric entries
  std::string formula;       // set for symbolic entries
};

// Evaluates the closed form.  Bounds stated as strict inequalities are
// normalized to the inclusive integer bound (X-1 for integral X, floor(X)
// otherwise).  Families with unspecified constants come back symbolic.
BoundValue f_upper(const BoundEntry& entry);

// |V(H)| for the family instance; used by the universal >= |V(H)|-2 check.
long long entry_vertex_count(const BoundEntry& entry);

struct VerificationReport {
  Graph h;
  std::string mode;            // human-readable mode descriptor
  uint64_t seed = 0;
  long long examined = 0;      // graphs surviving the minor filter
  long long generated = 0;     // graphs produced before filtering
  int observed_max_tw = -1;    // -1 when no graph survived
  std::optional<Graph> witness;
  long long bound = -1;        // -1 when no bound is involved
  bool pass = false;

  nlohmann::json to_json() const;
};

// Maximum exact treewidth over all isomorphism-distinct h-minor-free graphs
// on at most n_max vertices.  Cap: n_max <= 8.
VerificationReport empirical_f(const Graph& h, int n_max, int jobs = 1);

struct ExhaustiveMode {
  int n_max = 0;
};
struct RandomMode {
  int n = 0;
  int samples = 0;
  uint64_t seed = 0;
};

// Checks f_upper(entry) against exact treewidth of h-minor-free graphs,
// either exhaustively or over seeded random graphs (half Erdos-Renyi with
// edge probability in [2/n, 4/n], half random 3-regular).
VerificationReport verify_bound(const Graph& h, const BoundEntry& entry, ExhaustiveMode mode,
                                int jobs = 1);
VerificationReport verify_bound(const Graph& h, const BoundEntry& entry, RandomMode mode,
                                int jobs = 1);

// For acyclic t: every (h1 + t)-minor-free graph on <= n_max vertices must
// have treewidth at most empirical_f(h1, n_max) + |V(t)|.  Cap: n_max <= 7.
VerificationReport verify_tree_composition(const Graph& h1, const Graph& t, int n_max,
                                           int jobs = 1);

}  // namespace minorlab
