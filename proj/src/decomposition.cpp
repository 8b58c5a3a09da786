#include "minorlab/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "minorlab/errors.hpp"

namespace minorlab {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

int PathDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

namespace {

ValidationResult validate_decomposition(const Graph& g,
                                        const std::vector<std::vector<int>>& bags,
                                        const std::vector<std::pair<int, int>>& tree_edges) {
  ValidationResult res;
  int nb = static_cast<int>(bags.size());
  if (nb == 0) {
    if (g.n != 0) {
      res.reason = "no bags but graph is nonempty";
      return res;
    }
    res.valid = true;
    res.width = -1;
    return res;
  }
  for (const auto& b : bags) {
    std::set<int> s(b.begin(), b.end());
    if (s.size() != b.size()) {
      res.reason = "bag contains a repeated vertex";
      return res;
    }
    for (int v : b)
      if (v < 0 || v >= g.n) {
        res.reason = "bag vertex out of range";
        return res;
      }
  }
  // Tree shape: nb-1 edges, connected, valid endpoints.
  if (static_cast<int>(tree_edges.size()) != nb - 1) {
    res.reason = "tree must have exactly (bags - 1) edges";
    return res;
  }
  std::vector<std::vector<int>> tadj(nb);
  for (auto [a, b] : tree_edges) {
    if (a < 0 || b < 0 || a >= nb || b >= nb || a == b) {
      res.reason = "tree edge endpoint out of range";
      return res;
    }
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  std::vector<bool> seen(nb, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int cnt = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : tadj[u])
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
        ++cnt;
      }
  }
  if (cnt != nb) {
    res.reason = "tree is disconnected";
    return res;
  }
  // Vertex coverage + connected occurrence subtrees.
  std::vector<std::vector<int>> occ(g.n);
  for (int i = 0; i < nb; ++i)
    for (int v : bags[i]) occ[v].push_back(i);
  for (int v = 0; v < g.n; ++v) {
    if (occ[v].empty()) {
      res.reason = "vertex " + std::to_string(v) + " appears in no bag";
      return res;
    }
    std::set<int> inbags(occ[v].begin(), occ[v].end());
    std::vector<int> st{occ[v][0]};
    std::set<int> vis{occ[v][0]};
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      for (int w : tadj[u])
        if (inbags.count(w) && !vis.count(w)) {
          vis.insert(w);
          st.push_back(w);
        }
    }
    if (vis.size() != inbags.size()) {
      res.reason = "bags containing vertex " + std::to_string(v) + " are not connected";
      return res;
    }
  }
  // Edge coverage.
  for (auto [u, v] : g.edges()) {
    bool ok = false;
    for (int i : occ[u]) {
      const auto& b = bags[i];
      if (std::find(b.begin(), b.end(), v) != b.end()) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      res.reason = "edge (" + std::to_string(u) + "," + std::to_string(v) + ") not covered";
      return res;
    }
  }
  res.valid = true;
  res.width = -1;
  for (const auto& b : bags) res.width = std::max(res.width, static_cast<int>(b.size()) - 1);
  return res;
}

}  // namespace

ValidationResult validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  return validate_decomposition(g, td.bags, td.tree_edges);
}

ValidationResult validate_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < static_cast<int>(pd.bags.size()); ++i) edges.emplace_back(i, i + 1);
  return validate_decomposition(g, pd.bags, edges);
}

namespace {

// Neighbors of the component of v in G[S + v], excluding S + v itself.
// This is the degree v would have if eliminated after the set S.
uint64_t elimination_neighborhood(const std::vector<uint64_t>& adj, uint64_t s, int v) {
  uint64_t comp = 1ULL << v;
  uint64_t reach = adj[v];
  uint64_t frontier = reach & s & ~comp;
  while (frontier) {
    comp |= frontier;
    uint64_t nb = 0;
    uint64_t f = frontier;
    while (f) {
      int u = std::countr_zero(f);
      f &= f - 1;
      nb |= adj[u];
    }
    reach |= nb;
    frontier = reach & s & ~comp;
  }
  return reach & ~s & ~(1ULL << v);
}

// Build a decomposition from an elimination order by simulating elimination
// with fill-in; one bag per vertex, linked to the first-eliminated fill
// neighbor.
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
  int n = g.n;
  std::vector<uint64_t> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.adj_mask(v);
  std::vector<int> when(n);
  for (int i = 0; i < n; ++i) when[order[i]] = i;
  TreeDecomposition td;
  td.bags.resize(n);
  uint64_t alive = n == 64 ? ~0ULL : (1ULL << n) - 1;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    uint64_t nb = adj[v] & alive & ~(1ULL << v);
    td.bags[i].push_back(v);
    int link = -1, best = std::numeric_limits<int>::max();
    for (uint64_t f = nb; f;) {
      int u = std::countr_zero(f);
      f &= f - 1;
      td.bags[i].push_back(u);
      if (when[u] < best) {
        best = when[u];
        link = u;
      }
    }
    if (link >= 0) {
      td.tree_edges.emplace_back(i, when[link]);
    } else if (i + 1 < n) {
      td.tree_edges.emplace_back(i, i + 1);
    }
    // make nb a clique
    for (uint64_t f = nb; f;) {
      int u = std::countr_zero(f);
      f &= f - 1;
      adj[u] |= nb & ~(1ULL << u);
    }
    alive &= ~(1ULL << v);
  }
  return td;
}

}  // namespace

TreewidthResult exact_treewidth(const Graph& g) {
  if (g.n > 25) throw CapError("exact_treewidth: cap is n <= 25");
  TreewidthResult res;
  int n = g.n;
  if (n == 0) return res;  // width -1, empty decomposition
  std::vector<uint64_t> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.adj_mask(v);
  uint64_t full = (1ULL << n) - 1;
  // dp[S] = best possible max elimination degree over orderings that
  // eliminate exactly S first.
  std::vector<int8_t> dp(1ULL << n, 0);
  for (uint64_t s = 1; s <= full; ++s) {
    int best = std::numeric_limits<int>::max();
    for (uint64_t f = s; f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      uint64_t rest = s & ~(1ULL << v);
      int deg = std::popcount(elimination_neighborhood(adj, rest, v));
      best = std::min(best, std::max<int>(dp[rest], deg));
    }
    dp[s] = static_cast<int8_t>(best);
  }
  res.width = dp[full];
  // Recover an optimal elimination order back to front.
  std::vector<int> order;
  uint64_t s = full;
  while (s) {
    for (uint64_t f = s; f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      uint64_t rest = s & ~(1ULL << v);
      int deg = std::popcount(elimination_neighborhood(adj, rest, v));
      if (std::max<int>(dp[rest], deg) == dp[s]) {
        order.push_back(v);
        s = rest;
        break;
      }
    }
  }
  std::reverse(order.begin(), order.end());
  res.decomposition = decomposition_from_order(g, order);
  return res;
}

PathwidthResult exact_pathwidth(const Graph& g) {
  if (g.n > 20) throw CapError("exact_pathwidth: cap is n <= 20");
  PathwidthResult res;
  int n = g.n;
  if (n == 0) return res;
  std::vector<uint64_t> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.adj_mask(v);
  uint64_t full = (1ULL << n) - 1;
  // Vertex separation: dp[S] = min over orderings with prefix S of the max
  // boundary size over all prefixes up to S.
  std::vector<int8_t> dp(1ULL << n, 0);
  auto boundary = [&](uint64_t s) {
    int c = 0;
    for (uint64_t f = s; f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      if (adj[v] & ~s) ++c;
    }
    return c;
  };
  for (uint64_t s = 1; s <= full; ++s) {
    int best = std::numeric_limits<int>::max();
    for (uint64_t f = s; f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      best = std::min<int>(best, dp[s & ~(1ULL << v)]);
    }
    dp[s] = static_cast<int8_t>(std::max(best, boundary(s)));
  }
  res.width = dp[full];
  std::vector<int> order;
  uint64_t s = full;
  while (s) {
    for (uint64_t f = s; f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      if (std::max<int>(dp[s & ~(1ULL << v)], boundary(s)) == dp[s]) {
        order.push_back(v);
        s &= ~(1ULL << v);
        break;
      }
    }
  }
  std::reverse(order.begin(), order.end());
  // Bag i = v_i plus all earlier vertices that still have neighbors outside
  // the first i-1 placed vertices.
  res.decomposition.bags.resize(n);
  uint64_t prefix = 0;
  for (int i = 0; i < n; ++i) {
    res.decomposition.bags[i].push_back(order[i]);
    for (uint64_t f = prefix; f;) {
      int u = std::countr_zero(f);
      f &= f - 1;
      if (adj[u] & ~prefix) res.decomposition.bags[i].push_back(u);
    }
    prefix |= 1ULL << order[i];
  }
  return res;
}

TreewidthBounds treewidth_bounds_heuristic(const Graph& g) {
  TreewidthBounds out;
  int n = g.n;
  if (n == 0) {
    out.lower = 0;
    out.upper = -1;
    return out;
  }
  // Degeneracy.
  {
    std::vector<int> deg(n);
    std::vector<bool> dead(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int degeneracy = 0;
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int v = 0; v < n; ++v)
        if (!dead[v] && (best < 0 || deg[v] < deg[best])) best = v;
      degeneracy = std::max(degeneracy, deg[best]);
      dead[best] = true;
      for (int u : g.neighbors(best))
        if (!dead[u]) --deg[u];
    }
    out.lower = degeneracy;
  }
  // Contraction min-degree: repeatedly contract a minimum-degree vertex into
  // the neighbor sharing the fewest common neighbors; min degree of any minor
  // lower-bounds the treewidth.
  {
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (int v = 0; v < n; ++v) adj[v] = g.adj[v];
    std::vector<bool> dead(n, false);
    int alive = n, bound = 0;
    while (alive > 1) {
      int v = -1;
      for (int u = 0; u < n; ++u)
        if (!dead[u] && (v < 0 || adj[u].count() < adj[v].count())) v = u;
      bound = std::max(bound, adj[v].count());
      int mate = -1, best = std::numeric_limits<int>::max();
      for (int u = adj[v].first(); u >= 0; u = adj[v].next(u)) {
        VertexSet common = adj[v];
        common &= adj[u];
        int c = common.count();
        if (c < best) {
          best = c;
          mate = u;
        }
      }
      if (mate < 0) {  // isolated vertex
        dead[v] = true;
        --alive;
        continue;
      }
      adj[mate] |= adj[v];
      adj[mate].reset(mate);
      adj[mate].reset(v);
      for (int u = adj[v].first(); u >= 0; u = adj[v].next(u)) {
        adj[u].reset(v);
        if (u != mate) adj[u].set(mate);
      }
      dead[v] = true;
      --alive;
    }
    out.lower = std::max(out.lower, bound);
  }
  // Min-fill elimination for the upper bound.
  {
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (int v = 0; v < n; ++v) adj[v] = g.adj[v];
    std::vector<bool> dead(n, false);
    std::vector<int> order;
    int width = 0;
    for (int step = 0; step < n; ++step) {
      int pick = -1;
      long best_fill = std::numeric_limits<long>::max();
      for (int v = 0; v < n; ++v) {
        if (dead[v]) continue;
        auto nb = adj[v].to_vector();
        long fill = 0;
        for (size_t i = 0; i < nb.size(); ++i)
          for (size_t j = i + 1; j < nb.size(); ++j)
            if (!adj[nb[i]].test(nb[j])) ++fill;
        if (fill < best_fill ||
            (fill == best_fill && pick >= 0 && adj[v].count() < adj[pick].count())) {
          best_fill = fill;
          pick = v;
        }
      }
      auto nb = adj[pick].to_vector();
      width = std::max(width, static_cast<int>(nb.size()));
      for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
          if (!adj[nb[i]].test(nb[j])) {
            adj[nb[i]].set(nb[j]);
            adj[nb[j]].set(nb[i]);
          }
      for (int u : nb) adj[u].reset(pick);
      adj[pick].clear();
      dead[pick] = true;
      order.push_back(pick);
    }
    out.upper = n == 0 ? -1 : width;
    if (n <= 64) {
      out.upper_witness = decomposition_from_order(g, order);
    } else {
      // Large graphs: bag-per-vertex construction without word masks.
      std::vector<VertexSet> adj2(n, VertexSet(n));
      for (int v = 0; v < n; ++v) adj2[v] = g.adj[v];
      std::vector<int> when(n);
      for (int i = 0; i < n; ++i) when[order[i]] = i;
      TreeDecomposition td;
      td.bags.resize(n);
      for (int i = 0; i < n; ++i) {
        int v = order[i];
        auto nb = adj2[v].to_vector();
        td.bags[i].push_back(v);
        int link = -1, best = std::numeric_limits<int>::max();
        for (int u : nb) {
          td.bags[i].push_back(u);
          if (when[u] < best) {
            best = when[u];
            link = u;
          }
        }
        if (link >= 0)
          td.tree_edges.emplace_back(i, when[link]);
        else if (i + 1 < n)
          td.tree_edges.emplace_back(i, i + 1);
        for (int a : nb)
          for (int b : nb)
            if (a != b) adj2[a].set(b);
        for (int u : nb) adj2[u].reset(v);
        adj2[v].clear();
      }
      out.upper_witness = td;
    }
  }
  return out;
}

}  // namespace minorlab
