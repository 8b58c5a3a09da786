#include "minorlab/bramble.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "minorlab/errors.hpp"

namespace minorlab {

BrambleValidation validate_bramble(const Graph& g, const Bramble& b) {
  BrambleValidation res;
  if (b.elements.empty()) {
    res.reason = "bramble has no elements";
    return res;
  }
  std::vector<VertexSet> sets;
  for (size_t i = 0; i < b.elements.size(); ++i) {
    const auto& el = b.elements[i];
    if (el.empty()) {
      res.reason = "element " + std::to_string(i) + " is empty";
      return res;
    }
    std::set<int> uniq(el.begin(), el.end());
    if (uniq.size() != el.size()) {
      res.reason = "element " + std::to_string(i) + " has repeated vertices";
      return res;
    }
    for (int v : el)
      if (v < 0 || v >= g.n) {
        res.reason = "element " + std::to_string(i) + " has a vertex out of range";
        return res;
      }
    VertexSet s = VertexSet::of(g.n, el);
    if (!is_connected_subset(g, s)) {
      res.reason = "element " + std::to_string(i) + " is not connected";
      return res;
    }
    sets.push_back(s);
  }
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = i + 1; j < sets.size(); ++j) {
      if (sets[i].intersects(sets[j])) continue;
      bool touch = false;
      for (int v = sets[i].first(); v >= 0 && !touch; v = sets[i].next(v))
        if (g.adj[v].intersects(sets[j])) touch = true;
      if (!touch) {
        res.reason = "elements " + std::to_string(i) + " and " + std::to_string(j) +
                     " do not touch";
        return res;
      }
    }
  res.valid = true;
  return res;
}

namespace {

struct HittingSearch {
  std::vector<uint64_t> elements;
  int n = 0;
  int best = 0;
  uint64_t best_set = 0;

  // Greedy count of pairwise disjoint elements not hit by `chosen`.
  int lower_bound(uint64_t chosen) const {
    uint64_t used = 0;
    int c = 0;
    for (uint64_t el : elements) {
      if (el & chosen) continue;
      if (el & used) continue;
      used |= el;
      ++c;
    }
    return c;
  }

  void rec(uint64_t chosen, int size) {
    if (size + lower_bound(chosen) >= best) return;
    // Pick the smallest unhit element and branch on its vertices.
    const uint64_t* pick = nullptr;
    for (const uint64_t& el : elements) {
      if (el & chosen) continue;
      if (!pick || std::popcount(el) < std::popcount(*pick)) pick = &el;
    }
    if (!pick) {
      best = size;
      best_set = chosen;
      return;
    }
    for (uint64_t f = *pick; f;) {
      int v = std::countr_zero(f);
      f &= f - 1;
      rec(chosen | (1ULL << v), size + 1);
    }
  }
};

}  // namespace

BrambleOrderResult bramble_order(const Graph& g, const Bramble& b) {
  if (g.n > 30) throw CapError("bramble_order: cap is n <= 30");
  auto check = validate_bramble(g, b);
  if (!check.valid) throw std::invalid_argument("bramble_order: " + check.reason);
  HittingSearch hs;
  hs.n = g.n;
  for (const auto& el : b.elements) {
    uint64_t m = 0;
    for (int v : el) m |= 1ULL << v;
    hs.elements.push_back(m);
  }
  // Greedy initial solution: always take the vertex hitting the most
  // remaining elements.
  uint64_t chosen = 0;
  int size = 0;
  while (true) {
    int bestv = -1, bestc = 0;
    for (int v = 0; v < g.n; ++v) {
      int c = 0;
      for (uint64_t el : hs.elements)
        if (!(el & chosen) && ((el >> v) & 1)) ++c;
      if (c > bestc) {
        bestc = c;
        bestv = v;
      }
    }
    if (bestv < 0) break;
    chosen |= 1ULL << bestv;
    ++size;
  }
  hs.best = size;
  hs.best_set = chosen;
  hs.rec(0, 0);
  BrambleOrderResult out;
  out.order = hs.best;
  for (int v = 0; v < g.n; ++v)
    if ((hs.best_set >> v) & 1) out.hitting_set.push_back(v);
  return out;
}

Bramble grid_cross_bramble(int k) {
  if (k < 2) throw std::invalid_argument("grid_cross_bramble: need k >= 2");
  auto id = [k](int r, int c) { return r * k + c; };
  Bramble b;
  for (int i = 0; i < k - 1; ++i)
    for (int j = 0; j < k - 1; ++j) {
      std::set<int> cross;
      for (int l = 0; l < k - 1; ++l) {
        cross.insert(id(i, l));
        cross.insert(id(l, j));
      }
      b.elements.emplace_back(cross.begin(), cross.end());
    }
  std::vector<int> bottom, right;
  for (int l = 0; l < k; ++l) bottom.push_back(id(k - 1, l));
  for (int l = 0; l < k - 1; ++l) right.push_back(id(l, k - 1));
  b.elements.push_back(bottom);
  b.elements.push_back(right);
  return b;
}

namespace {

struct CycleSearch {
  const Graph* g = nullptr;
  std::vector<uint64_t> elements;
  int start = 0;
  std::vector<int> path;
  uint64_t on_path = 0;
  uint64_t allowed = 0;  // vertices still usable (index > start, unvisited)
  std::optional<std::vector<int>> found;

  bool all_hit(uint64_t verts) const {
    for (uint64_t el : elements)
      if (!(el & verts)) return false;
    return true;
  }

  // Every unhit element must still be reachable from the usable pool.
  bool feasible() const {
    uint64_t pool = on_path | allowed;
    for (uint64_t el : elements)
      if (!(el & pool)) return false;
    return true;
  }

  void rec(int u) {
    if (found) return;
    if (path.size() >= 3 && g->has_edge(u, start) && all_hit(on_path)) {
      found = path;
      return;
    }
    if (!feasible()) return;
    for (int v : g->neighbors(u)) {
      if (!((allowed >> v) & 1)) continue;
      allowed &= ~(1ULL << v);
      on_path |= 1ULL << v;
      path.push_back(v);
      rec(v);
      path.pop_back();
      on_path &= ~(1ULL << v);
      allowed |= 1ULL << v;
      if (found) return;
    }
  }
};

}  // namespace

std::optional<std::vector<int>> find_hitting_cycle(const Graph& g, const Bramble& b) {
  if (g.n > 20) throw CapError("find_hitting_cycle: cap is n <= 20");
  auto check = validate_bramble(g, b);
  if (!check.valid) throw std::invalid_argument("find_hitting_cycle: " + check.reason);
  CycleSearch cs;
  cs.g = &g;
  for (const auto& el : b.elements) {
    uint64_t m = 0;
    for (int v : el) m |= 1ULL << v;
    cs.elements.push_back(m);
  }
  // The smallest vertex on the cycle is the start; this kills rotations.
  for (int s = 0; s < g.n; ++s) {
    cs.start = s;
    cs.path = {s};
    cs.on_path = 1ULL << s;
    cs.allowed = 0;
    for (int v = s + 1; v < g.n; ++v) cs.allowed |= 1ULL << v;
    cs.rec(s);
    if (cs.found) return cs.found;
  }
  return std::nullopt;
}

PathPartitionResult path_partition(const Graph& g, const Bramble& b,
                                   const std::vector<int>& p, int c1, int c2,
                                   bool scan_from_end) {
  if (c1 < 1 || c2 < 0) throw std::invalid_argument("path_partition: need c1 >= 1, c2 >= 0");
  if (p.empty()) throw std::invalid_argument("path_partition: empty path");
  std::set<int> uniq(p.begin(), p.end());
  if (uniq.size() != p.size()) throw std::invalid_argument("path_partition: repeated vertex");
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1]))
      throw std::invalid_argument("path_partition: consecutive vertices not adjacent");
  auto check = validate_bramble(g, b);
  if (!check.valid) throw std::invalid_argument("path_partition: " + check.reason);

  std::vector<VertexSet> sets;
  for (const auto& el : b.elements) sets.push_back(VertexSet::of(g.n, el));
  VertexSet pverts = VertexSet::of(g.n, p);
  for (size_t i = 0; i < sets.size(); ++i)
    if (!sets[i].intersects(pverts))
      throw std::invalid_argument("path_partition: path misses element " + std::to_string(i));

  auto sub_order = [&](const VertexSet& verts, std::vector<int>* idx) {
    Bramble sub;
    std::vector<int> ids;
    for (size_t i = 0; i < sets.size(); ++i)
      if (sets[i].intersects(verts)) {
        sub.elements.push_back(b.elements[i]);
        ids.push_back(static_cast<int>(i));
      }
    if (idx) *idx = ids;
    if (sub.elements.empty()) return 0;
    return bramble_order(g, sub).order;
  };

  if (bramble_order(g, b).order < c1 + c2)
    throw std::invalid_argument("path_partition: bramble order below c1 + c2");

  std::vector<int> path = p;
  if (scan_from_end) std::reverse(path.begin(), path.end());

  // Grow the prefix one vertex at a time; each step raises the sub-bramble
  // order by at most one, so the first prefix reaching c1 hits it exactly.
  VertexSet prefix(g.n);
  size_t cut = 0;  // index of last vertex of p1
  int order1 = 0;
  for (size_t i = 0; i < path.size(); ++i) {
    prefix.set(path[i]);
    order1 = sub_order(prefix, nullptr);
    if (order1 >= c1) {
      cut = i;
      break;
    }
  }
  if (order1 < c1)
    throw std::invalid_argument("path_partition: prefix never reaches order c1");

  PathPartitionResult out;
  out.p1.assign(path.begin(), path.begin() + cut + 1);
  out.p2.assign(path.begin() + cut, path.end());
  out.order_b1 = order1;
  sub_order(prefix, &out.b1_indices);
  VertexSet strict = prefix;
  strict.reset(path[cut]);  // V(p1) - V(p2)
  if (strict.any()) {
    sub_order(strict, &out.b1_prime_indices);
  }
  return out;
}

}  // namespace minorlab
