#include "minorlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "minorlab/errors.hpp"

namespace minorlab {

int VertexSet::count() const {
  int c = 0;
  for (uint64_t x : w_) c += std::popcount(x);
  return c;
}

bool VertexSet::any() const {
  for (uint64_t x : w_)
    if (x) return true;
  return false;
}

bool VertexSet::intersects(const VertexSet& o) const {
  size_t m = std::min(w_.size(), o.w_.size());
  for (size_t i = 0; i < m; ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  for (size_t i = 0; i < w_.size(); ++i) {
    uint64_t other = i < o.w_.size() ? o.w_[i] : 0;
    if (w_[i] & ~other) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= i < o.w_.size() ? o.w_[i] : 0;
  return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& o) {
  for (size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

int VertexSet::next(int after) const {
  int start = after + 1;
  if (start >= n_) return -1;
  size_t wi = start >> 6;
  uint64_t cur = w_[wi] & ~((1ULL << (start & 63)) - 1);
  while (true) {
    if (cur) return static_cast<int>((wi << 6) + std::countr_zero(cur));
    if (++wi >= w_.size()) return -1;
    cur = w_[wi];
  }
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
  return out;
}

VertexSet VertexSet::of(int n, const std::vector<int>& vs) {
  VertexSet s(n);
  for (int v : vs) s.set(v);
  return s;
}

Graph::Graph(int n_) : n(n_), adj(n_, VertexSet(n_)) {}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: self loop");
  adj[u].set(v);
  adj[v].set(u);
}

void Graph::remove_edge(int u, int v) {
  adj[u].reset(v);
  adj[v].reset(u);
}

long Graph::edge_count() const {
  long d = 0;
  for (int v = 0; v < n; ++v) d += degree(v);
  return d / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v = adj[u].next(u); v >= 0; v = adj[u].next(v)) out.emplace_back(u, v);
  return out;
}

uint64_t Graph::adj_mask(int v) const {
  if (n > 64) throw std::invalid_argument("adj_mask: graph too large");
  uint64_t m = 0;
  for (int u : adj[v].to_vector()) m |= 1ULL << u;
  return m;
}

// ---- generators ----

Graph make_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("make_grid: sides must be >= 1");
  Graph g(rows * cols);
  g.labels.resize(g.n);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int id = r * cols + c;
      g.labels[id] = std::to_string(r) + "," + std::to_string(c);
      if (c + 1 < cols) g.add_edge(id, id + 1);
      if (r + 1 < rows) g.add_edge(id, id + cols);
    }
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("make_cycle: need n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("make_path: need n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph make_wheel(int k) {
  if (k < 4) throw std::invalid_argument("make_wheel: need k >= 4");
  Graph g(k);
  // hub = 0, rim = 1..k-1
  for (int i = 1; i < k; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i == k - 1 ? 1 : i + 1);
  }
  return g;
}

std::vector<int> identity_permutation(int l) {
  std::vector<int> pi(l);
  std::iota(pi.begin(), pi.end(), 1);
  return pi;
}

Graph make_twisted_prism(const TwistedPrismSpec& spec) {
  int l = spec.l;
  if (l < 3) throw std::invalid_argument("make_twisted_prism: need l >= 3");
  if (static_cast<int>(spec.pi.size()) != l)
    throw std::invalid_argument("make_twisted_prism: pi has wrong length");
  std::vector<bool> seen(l + 1, false);
  for (int x : spec.pi) {
    if (x < 1 || x > l || seen[x])
      throw std::invalid_argument("make_twisted_prism: pi is not a permutation of 1..l");
    seen[x] = true;
  }
  Graph g(2 * l);
  g.labels.resize(2 * l);
  for (int i = 1; i <= l; ++i) {
    g.labels[i - 1] = "v" + std::to_string(i);
    g.labels[l + i - 1] = "w" + std::to_string(i);
    g.add_edge(i - 1, i % l);              // v_i -- v_{i+1}
    g.add_edge(l + i - 1, l + i % l);      // w_i -- w_{i+1}
    g.add_edge(i - 1, l + spec.pi[i - 1] - 1);
  }
  return g;
}

// ---- operations ----

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n + b.n);
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.n + u, a.n + v);
  if (!a.labels.empty() || !b.labels.empty()) {
    g.labels.resize(g.n);
    for (int v = 0; v < a.n; ++v) g.labels[v] = a.labels.empty() ? "" : a.labels[v];
    for (int v = 0; v < b.n; ++v) g.labels[a.n + v] = b.labels.empty() ? "" : b.labels[v];
  }
  return g;
}

Graph subdivide(const Graph& g, const std::map<std::pair<int, int>, int>& counts) {
  auto es = g.edges();
  for (const auto& [e, c] : counts) {
    if (c < 0) throw std::invalid_argument("subdivide: negative count");
    if (e.first >= e.second || !g.has_edge(e.first, e.second))
      throw std::invalid_argument("subdivide: key is not an edge (u < v required)");
  }
  long extra = 0;
  for (auto e : es) {
    auto it = counts.find(e);
    if (it == counts.end()) throw std::invalid_argument("subdivide: missing edge key");
    extra += it->second;
  }
  Graph out(static_cast<int>(g.n + extra));
  int fresh = g.n;
  for (auto e : es) {
    int c = counts.at(e);
    int prev = e.first;
    for (int i = 0; i < c; ++i) {
      out.add_edge(prev, fresh);
      prev = fresh++;
    }
    out.add_edge(prev, e.second);
  }
  return out;
}

std::optional<int> girth(const Graph& g) {
  int best = -1;
  // BFS from every vertex; shortest cycle through the root is detected when
  // a non-tree edge joins two vertices whose levels are known.
  for (int s = 0; s < g.n; ++s) {
    std::vector<int> dist(g.n, -1), parent(g.n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (v != parent[u]) {
          int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

Graph contract_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("contract_edge: not an edge");
  int lo = std::min(u, v), hi = std::max(u, v);
  auto remap = [&](int x) { return x < hi ? x : (x == hi ? lo : x - 1); };
  Graph out(g.n - 1);
  for (auto [a, b] : g.edges()) {
    int ra = remap(a), rb = remap(b);
    if (ra != rb && !out.has_edge(ra, rb)) out.add_edge(ra, rb);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> idx(g.n, -1);
  for (size_t i = 0; i < keep.size(); ++i) idx[keep[i]] = static_cast<int>(i);
  Graph out(static_cast<int>(keep.size()));
  for (auto [u, v] : g.edges())
    if (idx[u] >= 0 && idx[v] >= 0) out.add_edge(idx[u], idx[v]);
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  VertexSet all(g.n);
  for (int v = 0; v < g.n; ++v) all.set(v);
  return is_connected_subset(g, all);
}

bool is_connected_subset(const Graph& g, const VertexSet& s) {
  int start = s.first();
  if (start < 0) return false;  // empty set is not a connected branch set
  VertexSet seen(g.n);
  seen.set(start);
  std::vector<int> stack{start};
  int cnt = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    VertexSet nb = g.adj[u];
    nb &= s;
    nb.subtract(seen);
    for (int v = nb.first(); v >= 0; v = nb.next(v)) {
      seen.set(v);
      stack.push_back(v);
      ++cnt;
    }
  }
  return cnt == s.count();
}

// ---- isomorphism and enumeration ----

namespace {

// Lower-triangle bits of the adjacency matrix under a vertex order, packed
// depth by depth: for d = 1..n-1 the bits (order[0],order[d]) ..
// (order[d-1],order[d]).  With this layout a prefix of the order determines
// a prefix of the key, which makes lexicographic pruning sound.
std::vector<uint64_t> key_bits(const Graph& g, const std::vector<int>& order) {
  int n = g.n;
  int bits = n * (n - 1) / 2;
  std::vector<uint64_t> key((bits + 63) / 64, 0);
  int pos = 0;
  for (int d = 1; d < n; ++d)
    for (int i = 0; i < d; ++i, ++pos)
      if (g.has_edge(order[i], order[d])) key[pos >> 6] |= 1ULL << (63 - (pos & 63));
  return key;
}

// Degree-pruned search for the minimal key.  Vertices with equal degree are
// interchangeable candidates at each position.
void canon_rec(const Graph& g, std::vector<int>& order, std::vector<bool>& used, int depth,
               std::vector<uint64_t>& best, bool& have_best) {
  int n = g.n;
  if (depth == n) {
    auto key = key_bits(g, order);
    if (!have_best || key < best) {
      best = key;
      have_best = true;
    }
    return;
  }
  // The first depth*(depth-1)/2 key bits are fully determined by the prefix;
  // stop as soon as they compare greater than best.
  if (have_best && depth >= 2) {
    int pos = 0;
    for (int d = 1; d < depth; ++d)
      for (int i = 0; i < d; ++i, ++pos) {
        bool bit = g.has_edge(order[i], order[d]);
        bool bbit = (best[pos >> 6] >> (63 - (pos & 63))) & 1;
        if (bit != bbit) {
          if (bit > bbit) return;  // prefix already larger than best
          d = depth;               // prefix smaller: cannot prune
          break;
        }
      }
  }
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    used[v] = true;
    order[depth] = v;
    canon_rec(g, order, used, depth + 1, best, have_best);
    used[v] = false;
  }
}

Graph graph_from_key(int n, const std::vector<uint64_t>& key) {
  Graph g(n);
  int pos = 0;
  for (int d = 1; d < n; ++d)
    for (int i = 0; i < d; ++i, ++pos)
      if ((key[pos >> 6] >> (63 - (pos & 63))) & 1) g.add_edge(i, d);
  return g;
}

bool iso_rec(const Graph& a, const Graph& b, std::vector<int>& map, std::vector<bool>& used,
             int depth) {
  if (depth == a.n) return true;
  for (int v = 0; v < b.n; ++v) {
    if (used[v] || a.degree(depth) != b.degree(v)) continue;
    bool ok = true;
    for (int u = 0; u < depth && ok; ++u)
      if (a.has_edge(depth, u) != b.has_edge(map[u], v)) ok = false;
    if (!ok) continue;
    used[v] = true;
    map[depth] = v;
    if (iso_rec(a, b, map, used, depth + 1)) return true;
    used[v] = false;
  }
  return false;
}

}  // namespace

std::vector<uint64_t> canonical_key(const Graph& g) {
  std::vector<int> order(g.n);
  std::vector<bool> used(g.n, false);
  std::vector<uint64_t> best;
  bool have = false;
  canon_rec(g, order, used, 0, best, have);
  if (g.n <= 1) return std::vector<uint64_t>{};
  return best;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  // Map vertices of a in decreasing-degree order for faster failure.
  std::vector<int> order(a.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a.degree(x) > a.degree(y); });
  Graph a2(a.n);
  std::vector<int> pos(a.n);
  for (int i = 0; i < a.n; ++i) pos[order[i]] = i;
  for (auto [u, v] : a.edges()) a2.add_edge(pos[u], pos[v]);
  std::vector<int> map(a.n, -1);
  std::vector<bool> used(b.n, false);
  return iso_rec(a2, b, map, used, 0);
}

const std::vector<Graph>& enumerate_graphs(int n) {
  if (n < 1 || n > 8) throw CapError("enumerate_graphs: supported range is 1 <= n <= 8");
  static std::vector<std::vector<Graph>> cache(9);
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[n].empty()) return cache[n];
  if (n == 1) {
    cache[1].push_back(Graph(1));
    return cache[1];
  }
  const std::vector<Graph>& prev =
      cache[n - 1].empty() ? enumerate_graphs(n - 1) : cache[n - 1];
  // Every class on n vertices arises from a class on n-1 vertices by adding
  // one vertex with some neighborhood; dedupe by canonical key.
  std::set<std::vector<uint64_t>> seen;
  for (const Graph& base : prev) {
    for (uint64_t nb = 0; nb < (1ULL << (n - 1)); ++nb) {
      Graph g(n);
      for (auto [u, v] : base.edges()) g.add_edge(u, v);
      for (int v = 0; v < n - 1; ++v)
        if ((nb >> v) & 1) g.add_edge(v, n - 1);
      seen.insert(canonical_key(g));
    }
  }
  for (const auto& key : seen) cache[n].push_back(graph_from_key(n, key));
  return cache[n];
}

}  // namespace minorlab
