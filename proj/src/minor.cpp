#include "minorlab/minor.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "minorlab/errors.hpp"

namespace minorlab {

MinorValidation validate_minor_model(const Graph& g, const Graph& h, const MinorModel& m) {
  MinorValidation res;
  if (static_cast<int>(m.branch_sets.size()) != h.n) {
    res.reason = "model has " + std::to_string(m.branch_sets.size()) + " branch sets, pattern has " +
                 std::to_string(h.n) + " vertices";
    return res;
  }
  std::vector<VertexSet> sets;
  VertexSet used(g.n);
  for (int x = 0; x < h.n; ++x) {
    const auto& bs = m.branch_sets[x];
    if (bs.empty()) {
      res.reason = "branch set " + std::to_string(x) + " is empty";
      return res;
    }
    std::set<int> uniq(bs.begin(), bs.end());
    if (uniq.size() != bs.size()) {
      res.reason = "branch set " + std::to_string(x) + " has repeated vertices";
      return res;
    }
    for (int v : bs)
      if (v < 0 || v >= g.n) {
        res.reason = "branch set " + std::to_string(x) + " has a vertex out of range";
        return res;
      }
    VertexSet s = VertexSet::of(g.n, bs);
    if (s.intersects(used)) {
      res.reason = "branch sets not disjoint (set " + std::to_string(x) + " overlaps an earlier one)";
      return res;
    }
    if (!is_connected_subset(g, s)) {
      res.reason = "branch set " + std::to_string(x) + " is not connected";
      return res;
    }
    used |= s;
    sets.push_back(s);
  }
  for (auto [x, y] : h.edges()) {
    bool joined = false;
    for (int v = sets[x].first(); v >= 0 && !joined; v = sets[x].next(v))
      if (g.adj[v].intersects(sets[y])) joined = true;
    if (!joined) {
      res.reason = "pattern edge (" + std::to_string(x) + "," + std::to_string(y) +
                   ") has no realizing edge";
      return res;
    }
  }
  res.valid = true;
  return res;
}

namespace {

struct MinorSearch {
  int n = 0, k = 0;
  std::vector<uint64_t> gadj;           // host adjacency
  std::vector<std::vector<int>> hadj;   // pattern adjacency (reordered)
  std::vector<int> horder;              // position -> original h vertex
  std::vector<uint64_t> assigned;       // per position
  uint64_t used = 0;
  bool done = false;

  uint64_t nb_mask(uint64_t s) const {
    uint64_t m = 0;
    for (uint64_t f = s; f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      m |= gadj[v];
    }
    return m & ~s;
  }

  // Connected region reachable from b through pool.
  uint64_t region(uint64_t b, uint64_t pool) const {
    uint64_t r = b;
    while (true) {
      uint64_t grow = nb_mask(r) & pool & ~r;
      if (!grow) return r;
      r |= grow;
    }
  }

  void finish_and_descend(int t, uint64_t b) {
    // Future pattern neighbors of position t each need a distinct free
    // attachment vertex next to b.
    int future = 0;
    for (int j : hadj[t])
      if (j > t) ++future;
    uint64_t free_after = ~(used | b) & ((n == 64) ? ~0ULL : ((1ULL << n) - 1));
    if (std::popcount(nb_mask(b) & free_after) < future) return;
    assigned[t] = b;
    used |= b;
    search(t + 1);
    used &= ~b;
    if (done) return;
    assigned[t] = 0;
  }

  void grow(int t, uint64_t b, uint64_t excluded, const std::vector<uint64_t>& want) {
    if (done) return;
    uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    uint64_t free = ~used & ~b & full;
    // Leave at least one vertex per unassigned pattern vertex.
    if (std::popcount(free) < k - t - 1) return;
    uint64_t pool = free & ~excluded;
    uint64_t reach = region(b, pool);
    uint64_t unsat = 0;  // bit i of `want` not yet adjacent to b
    for (size_t i = 0; i < want.size(); ++i)
      if (!(nb_mask(want[i]) & b)) unsat |= 1ULL << i;
    // Each unsatisfied earlier neighbor must still be reachable.
    for (uint64_t f = unsat; f;) {
      int i = std::countr_zero(f);
      f &= f - 1;
      if (!(nb_mask(want[i]) & reach)) return;
    }
    if (!unsat) finish_and_descend(t, b);
    if (done) return;
    uint64_t ext = nb_mask(b) & pool;
    for (uint64_t f = ext; f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      grow(t, b | (1ULL << v), excluded, want);
      if (done) return;
      excluded |= 1ULL << v;  // sets containing v are covered above
    }
  }

  void search(int t) {
    if (t == k) {
      done = true;
      return;
    }
    std::vector<uint64_t> want;
    for (int j : hadj[t])
      if (j < t) want.push_back(assigned[j]);
    uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    uint64_t seeds = ~used & full;
    uint64_t tried = 0;
    for (uint64_t f = seeds; f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      grow(t, 1ULL << v, tried, want);
      if (done) return;
      tried |= 1ULL << v;
    }
  }
};

}  // namespace

std::optional<MinorModel> find_minor_model(const Graph& g, const Graph& h,
                                           const MinorSearchCaps& caps) {
  if (h.n > caps.max_h) throw CapError("find_minor_model: pattern exceeds cap");
  if (g.n > caps.max_g) throw CapError("find_minor_model: host exceeds cap");
  if (g.n > 64) throw CapError("find_minor_model: host must have at most 64 vertices");
  if (h.n == 0) return MinorModel{};
  if (h.n > g.n || h.edge_count() > g.edge_count()) return std::nullopt;
  MinorSearch ms;
  ms.n = g.n;
  ms.k = h.n;
  ms.gadj.resize(g.n);
  for (int v = 0; v < g.n; ++v) ms.gadj[v] = g.adj_mask(v);
  ms.horder.resize(h.n);
  std::iota(ms.horder.begin(), ms.horder.end(), 0);
  std::stable_sort(ms.horder.begin(), ms.horder.end(),
                   [&](int a, int b) { return h.degree(a) > h.degree(b); });
  std::vector<int> pos(h.n);
  for (int i = 0; i < h.n; ++i) pos[ms.horder[i]] = i;
  ms.hadj.resize(h.n);
  for (auto [x, y] : h.edges()) {
    ms.hadj[pos[x]].push_back(pos[y]);
    ms.hadj[pos[y]].push_back(pos[x]);
  }
  ms.assigned.assign(h.n, 0);
  ms.search(0);
  if (!ms.done) return std::nullopt;
  MinorModel m;
  m.branch_sets.resize(h.n);
  for (int i = 0; i < h.n; ++i) {
    uint64_t b = ms.assigned[i];
    for (uint64_t f = b; f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      m.branch_sets[ms.horder[i]].push_back(v);
    }
  }
  return m;
}

MinorModel compose_models(const MinorModel& mid_in_g, const MinorModel& h_in_mid) {
  MinorModel out;
  out.branch_sets.resize(h_in_mid.branch_sets.size());
  for (size_t x = 0; x < h_in_mid.branch_sets.size(); ++x) {
    std::set<int> acc;
    for (int y : h_in_mid.branch_sets[x]) {
      if (y < 0 || y >= static_cast<int>(mid_in_g.branch_sets.size()))
        throw std::invalid_argument("compose_models: inner model references missing branch set");
      const auto& bs = mid_in_g.branch_sets[y];
      acc.insert(bs.begin(), bs.end());
    }
    out.branch_sets[x].assign(acc.begin(), acc.end());
  }
  return out;
}

namespace {

// Unit-vertex-capacity max flow on the split graph.
struct FlowNet {
  struct Arc {
    int to, rev, cap;
  };
  std::vector<std::vector<Arc>> arcs;

  explicit FlowNet(int nodes) : arcs(nodes) {}

  void add(int a, int b, int cap) {
    arcs[a].push_back({b, static_cast<int>(arcs[b].size()), cap});
    arcs[b].push_back({a, static_cast<int>(arcs[a].size()) - 1, 0});
  }

  bool augment(int src, int snk) {
    std::vector<std::pair<int, int>> pred(arcs.size(), {-1, -1});
    std::vector<bool> seen(arcs.size(), false);
    std::queue<int> q;
    q.push(src);
    seen[src] = true;
    while (!q.empty() && !seen[snk]) {
      int u = q.front();
      q.pop();
      for (int i = 0; i < static_cast<int>(arcs[u].size()); ++i) {
        const Arc& a = arcs[u][i];
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = true;
          pred[a.to] = {u, i};
          q.push(a.to);
        }
      }
    }
    if (!seen[snk]) return false;
    for (int v = snk; v != src;) {
      auto [u, i] = pred[v];
      arcs[u][i].cap -= 1;
      arcs[arcs[u][i].to][arcs[u][i].rev].cap += 1;
      v = u;
    }
    return true;
  }
};

}  // namespace

DisjointPathsResult max_vertex_disjoint_paths(const Graph& g, const std::vector<int>& s,
                                              const std::vector<int>& t) {
  if (s.empty() || t.empty())
    throw std::invalid_argument("max_vertex_disjoint_paths: S and T must be nonempty");
  std::set<int> ss(s.begin(), s.end()), ts(t.begin(), t.end());
  for (int v : s)
    if (v < 0 || v >= g.n) throw std::invalid_argument("max_vertex_disjoint_paths: bad S vertex");
  for (int v : t)
    if (v < 0 || v >= g.n) throw std::invalid_argument("max_vertex_disjoint_paths: bad T vertex");
  for (int v : ss)
    if (ts.count(v)) throw std::invalid_argument("max_vertex_disjoint_paths: S and T intersect");

  const int INF = g.n + 2;
  auto in = [](int v) { return 2 * v; };
  auto out = [](int v) { return 2 * v + 1; };
  int SRC = 2 * g.n, SNK = 2 * g.n + 1;
  FlowNet net(2 * g.n + 2);
  for (int v = 0; v < g.n; ++v) net.add(in(v), out(v), 1);
  for (auto [u, v] : g.edges()) {
    net.add(out(u), in(v), INF);
    net.add(out(v), in(u), INF);
  }
  for (int v : ss) net.add(SRC, in(v), INF);
  for (int v : ts) net.add(out(v), SNK, INF);
  int flow = 0;
  while (net.augment(SRC, SNK)) ++flow;

  DisjointPathsResult res;
  // Path extraction: walk saturated vertex arcs from each source vertex that
  // carries flow.
  auto flow_out = [&](int v) -> int {
    // successor w with positive flow on out(v) -> in(w)
    for (const auto& a : net.arcs[out(v)]) {
      if (a.to == SNK || a.to == in(v)) continue;
      // forward arcs to in(w) had cap INF; spent capacity = flow
      if (a.to % 2 == 0) {
        int w = a.to / 2;
        int used = INF - a.cap;
        if (used > 0 && a.cap < INF && g.has_edge(v, w)) return w;
      }
    }
    return -1;
  };
  std::vector<bool> consumed_edge;  // guard against re-walking shared arcs
  std::vector<std::vector<bool>> edge_used(g.n, std::vector<bool>(g.n, false));
  for (int sv : ss) {
    // flow enters sv iff its vertex arc is saturated via SRC
    bool active = false;
    for (const auto& a : net.arcs[SRC])
      if (a.to == in(sv) && a.cap < INF) active = true;
    if (!active) continue;
    std::vector<int> path{sv};
    int cur = sv;
    while (!ts.count(cur)) {
      int nxt = -1;
      for (const auto& a : net.arcs[out(cur)]) {
        if (a.to % 2 != 0) continue;
        int w = a.to / 2;
        if (w == cur || !g.has_edge(cur, w)) continue;
        if (a.cap < INF && !edge_used[cur][w]) {
          nxt = w;
          break;
        }
      }
      if (nxt < 0) break;
      edge_used[cur][nxt] = true;
      path.push_back(nxt);
      cur = nxt;
    }
    if (ts.count(cur)) res.paths.push_back(path);
  }
  (void)flow_out;
  // Cut: vertices whose split arc crosses the residual reachability frontier.
  std::vector<bool> reach(2 * g.n + 2, false);
  std::vector<int> stack{SRC};
  reach[SRC] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const auto& a : net.arcs[u])
      if (a.cap > 0 && !reach[a.to]) {
        reach[a.to] = true;
        stack.push_back(a.to);
      }
  }
  for (int v = 0; v < g.n; ++v)
    if (reach[in(v)] && !reach[out(v)]) res.cut.push_back(v);
  return res;
}

namespace {

bool connects(const Graph& g, int a, int b, uint64_t banned) {
  if (((banned >> a) & 1) || ((banned >> b) & 1)) return false;
  uint64_t seen = 1ULL << a;
  std::vector<int> stack{a};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (u == b) return true;
    for (int v : g.neighbors(u))
      if (!((seen >> v) & 1) && !((banned >> v) & 1)) {
        seen |= 1ULL << v;
        stack.push_back(v);
      }
  }
  return false;
}

std::optional<std::vector<int>> bfs_path(const Graph& g, int a, int b, uint64_t banned) {
  if (((banned >> a) & 1) || ((banned >> b) & 1)) return std::nullopt;
  std::vector<int> par(g.n, -2);
  std::queue<int> q;
  q.push(a);
  par[a] = -1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (u == b) break;
    for (int v : g.neighbors(u))
      if (par[v] == -2 && !((banned >> v) & 1)) {
        par[v] = u;
        q.push(v);
      }
  }
  if (par[b] == -2) return std::nullopt;
  std::vector<int> path;
  for (int v = b; v != -1; v = par[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

struct TwoPathSearch {
  const Graph* g;
  int t1, s2, t2;
  std::vector<int> path;
  uint64_t on_path = 0;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> found;

  void rec(int u) {
    if (found) return;
    if (u == t1) {
      if (auto p2 = bfs_path(*g, s2, t2, on_path)) found = std::make_pair(path, *p2);
      return;
    }
    // If the partial path already separates s2 from t2, no extension helps.
    if (!connects(*g, s2, t2, on_path)) return;
    for (int v : g->neighbors(u)) {
      if ((on_path >> v) & 1) continue;
      if (v == s2 || v == t2) continue;
      on_path |= 1ULL << v;
      path.push_back(v);
      rec(v);
      path.pop_back();
      on_path &= ~(1ULL << v);
      if (found) return;
    }
  }
};

}  // namespace

std::optional<std::pair<std::vector<int>, std::vector<int>>> two_disjoint_paths(
    const Graph& g, int s1, int t1, int s2, int t2) {
  if (g.n > 30) throw CapError("two_disjoint_paths: cap is n <= 30");
  std::set<int> terms{s1, t1, s2, t2};
  if (terms.size() != 4) throw std::invalid_argument("two_disjoint_paths: terminals must be distinct");
  for (int v : terms)
    if (v < 0 || v >= g.n) throw std::invalid_argument("two_disjoint_paths: terminal out of range");
  TwoPathSearch tp;
  tp.g = &g;
  tp.t1 = t1;
  tp.s2 = s2;
  tp.t2 = t2;
  tp.path = {s1};
  tp.on_path = 1ULL << s1;
  tp.rec(s1);
  return tp.found;
}

}  // namespace minorlab
