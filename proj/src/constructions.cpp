#include "minorlab/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>

#include "minorlab/errors.hpp"

namespace minorlab {

MonotoneResult es_monotone(const std::vector<int>& seq, int a, int b) {
  int n = static_cast<int>(seq.size());
  if (a < 1 || b < 1) throw std::invalid_argument("es_monotone: targets must be positive");
  if (n < (a - 1) * (b - 1) + 1)
    throw std::invalid_argument("es_monotone: sequence shorter than (a-1)(b-1)+1");
  {
    std::set<int> uniq(seq.begin(), seq.end());
    if (static_cast<int>(uniq.size()) != n)
      throw std::invalid_argument("es_monotone: values must be distinct");
  }
  // O(n^2) longest monotone runs with predecessor links.
  std::vector<int> inc(n, 1), dec(n, 1), pinc(n, -1), pdec(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      if (seq[j] < seq[i] && inc[j] + 1 > inc[i]) {
        inc[i] = inc[j] + 1;
        pinc[i] = j;
      }
      if (seq[j] > seq[i] && dec[j] + 1 > dec[i]) {
        dec[i] = dec[j] + 1;
        pdec[i] = j;
      }
    }
  auto recover = [&](const std::vector<int>& len, const std::vector<int>& pred, int target) {
    int at = -1;
    for (int i = 0; i < n && at < 0; ++i)
      if (len[i] >= target) at = i;
    std::vector<int> idx;
    // Walk back, then trim to exactly `target` entries from the front.
    for (int i = at; i >= 0; i = pred[i]) idx.push_back(i);
    std::reverse(idx.begin(), idx.end());
    idx.resize(target);
    return idx;
  };
  MonotoneResult out;
  int best_inc = *std::max_element(inc.begin(), inc.end());
  if (best_inc >= a) {
    out.increasing = true;
    out.indices = recover(inc, pinc, a);
    return out;
  }
  int best_dec = *std::max_element(dec.begin(), dec.end());
  if (best_dec >= b) {
    out.increasing = false;
    out.indices = recover(dec, pdec, b);
    return out;
  }
  // Unreachable for valid input sizes.
  throw std::logic_error("es_monotone: no monotone subsequence found");
}

namespace {

// Hamiltonian cycle of the a x b grid with a even: column-0 highway plus a
// row snake over the remaining columns.  Contains every horizontal edge of
// the last row.
std::vector<std::pair<int, int>> ham_even_rows(int a, int b) {
  std::vector<std::pair<int, int>> cyc;
  for (int j = 1; j < b; ++j) cyc.emplace_back(0, j);
  for (int i = 1; i < a; ++i) {
    if (i % 2 == 1)
      for (int j = b - 1; j >= 1; --j) cyc.emplace_back(i, j);
    else
      for (int j = 1; j < b; ++j) cyc.emplace_back(i, j);
  }
  for (int i = a - 1; i >= 0; --i) cyc.emplace_back(i, 0);
  return cyc;
}

}  // namespace

std::vector<int> grid_hamiltonian_cycle(int a, int b, bool allow_corner_skip) {
  if (a < 2 || b < 2)
    throw std::invalid_argument("grid_hamiltonian_cycle: both sides must be >= 2");
  std::vector<std::pair<int, int>> cyc;
  if (a % 2 == 0) {
    cyc = ham_even_rows(a, b);
  } else if (b % 2 == 0) {
    for (auto [i, j] : ham_even_rows(b, a)) cyc.emplace_back(j, i);
  } else {
    if (!allow_corner_skip)
      throw std::invalid_argument(
          "grid_hamiltonian_cycle: odd x odd grid has no Hamiltonian cycle");
    // Cycle on rows 0..a-2, then teeth dipping into the bottom row cover all
    // of it except the corner (a-1, b-1).
    auto base = ham_even_rows(a - 1, b);
    for (size_t idx = 0; idx < base.size(); ++idx) {
      auto [i, j] = base[idx];
      cyc.emplace_back(i, j);
      auto [i2, j2] = base[(idx + 1) % base.size()];
      // Row a-2 is walked right to left; splice below each pair (2k+1, 2k).
      if (i == a - 2 && i2 == a - 2 && j == j2 + 1 && j2 % 2 == 0 && j <= b - 2) {
        cyc.emplace_back(a - 1, j);
        cyc.emplace_back(a - 1, j2);
      }
    }
  }
  std::vector<int> ids;
  for (auto [i, j] : cyc) ids.push_back(i * b + j);
  return ids;
}

std::pair<std::vector<int>, std::vector<int>> grid_band_cycles(int g, int l1, int l2) {
  if (l1 < 1 || l2 < 1) throw std::invalid_argument("grid_band_cycles: lengths must be >= 1");
  int r1 = (l1 + g - 1) / g + 1;
  int r2 = (l2 + g - 1) / g + 1;
  if (g < r1 + r2)
    throw std::invalid_argument("grid_band_cycles: grid side below ceil(l1/g)+ceil(l2/g)+2");
  auto band = [&](int rows, int row_offset) {
    auto cyc = grid_hamiltonian_cycle(rows, g, /*allow_corner_skip=*/true);
    for (int& id : cyc) {
      int i = id / g, j = id % g;
      id = (i + row_offset) * g + j;
    }
    return cyc;
  };
  return {band(r1, 0), band(r2, r1)};
}

int grid_prism_length(int r) { return 8 * r * r - 4 * r; }

MinorModel grid_prism_model(int r) {
  if (r < 1) throw std::invalid_argument("grid_prism_model: need r >= 1");
  int N = 4 * r;
  auto id = [N](int x, int y) { return y * N + x; };  // (col, row) in make_grid(N, N)

  // Outer snaking cycle; traversal order matters.
  std::vector<std::pair<int, int>> red;
  for (int k = 0; k < r; ++k) {
    int y = 4 * k;
    for (int x = N - 4; x >= 0; --x) red.emplace_back(x, y);
    red.emplace_back(0, y + 1);
    red.emplace_back(0, y + 2);
    for (int x = 0; x <= N - 4; ++x) red.emplace_back(x, y + 3);
  }
  for (int x = N - 3; x <= N - 1; ++x) red.emplace_back(x, N - 1);
  for (int y = N - 2; y >= 0; --y) red.emplace_back(N - 1, y);
  red.emplace_back(N - 2, 0);
  red.emplace_back(N - 3, 0);

  // Inner snaking cycle, one step inside the outer one.
  std::vector<std::pair<int, int>> blue;
  for (int k = 0; k < r; ++k) {
    int y = 4 * k;
    for (int x = N - 3; x >= 1; --x) blue.emplace_back(x, y + 1);
    blue.emplace_back(1, y + 2);
    for (int x = 2; x <= N - 3; ++x) blue.emplace_back(x, y + 2);
    if (k + 1 < r) {
      blue.emplace_back(N - 3, y + 3);
      blue.emplace_back(N - 3, y + 4);
    }
  }
  blue.emplace_back(N - 2, N - 2);
  for (int y = N - 3; y >= 1; --y) blue.emplace_back(N - 2, y);

  // Rungs: (outer endpoint, inner endpoint).
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> rungs;
  for (int k = 0; k < r; ++k) {
    int y = 4 * k;
    for (int x = 1; x <= N - 4; ++x) rungs.push_back({{x, y}, {x, y + 1}});
    for (int x = 1; x <= N - 4; ++x) rungs.push_back({{x, y + 3}, {x, y + 2}});
  }
  for (int y = 1; y <= N - 2; ++y) rungs.push_back({{N - 1, y}, {N - 2, y}});
  rungs.push_back({{N - 3, 0}, {N - 3, 1}});
  rungs.push_back({{N - 3, N - 1}, {N - 3, N - 2}});

  int L = grid_prism_length(r);
  if (static_cast<int>(rungs.size()) != L)
    throw std::logic_error("grid_prism_model: rung count mismatch");

  std::map<std::pair<int, int>, int> posR, posB;
  for (size_t i = 0; i < red.size(); ++i) posR[red[i]] = static_cast<int>(i);
  for (size_t i = 0; i < blue.size(); ++i) posB[blue[i]] = static_cast<int>(i);

  struct Rung {
    int rp, bp;
  };
  std::vector<Rung> rs;
  for (auto& [rc, bc] : rungs) rs.push_back({posR.at(rc), posB.at(bc)});
  std::sort(rs.begin(), rs.end(), [](const Rung& a, const Rung& b) { return a.rp < b.rp; });
  // The inner endpoints must appear in the same cyclic order.
  {
    int start = 0;
    for (int i = 1; i < L; ++i)
      if (rs[i].bp < rs[start].bp) start = i;
    for (int i = 1; i < L; ++i)
      if (rs[(start + i) % L].bp <= rs[(start + i - 1) % L].bp)
        throw std::logic_error("grid_prism_model: rung order misaligned");
  }

  MinorModel m;
  m.branch_sets.resize(2 * L);
  auto arc = [&](const std::vector<std::pair<int, int>>& walk, int from, int to_excl) {
    std::vector<int> out;
    int len = static_cast<int>(walk.size());
    for (int p = from; p != to_excl; p = (p + 1) % len) out.push_back(id(walk[p].first, walk[p].second));
    return out;
  };
  for (int k = 0; k < L; ++k) {
    m.branch_sets[k] = arc(red, rs[k].rp, rs[(k + 1) % L].rp);
    m.branch_sets[L + k] = arc(blue, rs[k].bp, rs[(k + 1) % L].bp);
  }
  return m;
}

// ---- twisted prism -> 4x4 grid ----

namespace {

// Fixed models of the 4x4 grid in the padded 11-rung ladder (see
// padded_ladder_host), indexed by the inner spare's edge offset.  Found once
// by exhaustive search and checked by the test suite.  The bare 11-rung
// circular ladder has no 4x4 grid minor; the two spare vertices are needed.
const std::vector<std::vector<int>> kGrid4InLadder12[11] = {
    {{23}, {12}, {13}, {14}, {11}, {0, 1, 22}, {2, 3, 4}, {15}, {21}, {8, 9, 10}, {5, 6, 7}, {16}, {20}, {19}, {18}, {17}},
    {{21}, {11}, {12}, {23}, {20}, {0, 9, 10}, {1, 2, 22}, {13}, {19}, {6, 7, 8}, {3, 4, 5}, {14}, {18}, {17}, {16}, {15}},
    {{11}, {12}, {13}, {23}, {21}, {0, 1, 10, 22}, {2, 3}, {14}, {20}, {7, 8, 9}, {4, 5, 6}, {15}, {19}, {18}, {17}, {16}},
    {{12}, {13}, {14}, {23}, {11}, {0, 1, 2, 22}, {3, 4}, {15}, {21}, {8, 9, 10}, {5, 6, 7}, {16}, {20}, {19}, {18}, {17}},
    {{21}, {11}, {12}, {13}, {20}, {0, 9, 10}, {1, 2, 3, 22}, {14}, {19}, {6, 7, 8}, {4, 5}, {15}, {18}, {17}, {16}, {23}},
    {{11}, {12}, {13}, {14}, {21}, {0, 1, 10, 22}, {2, 3, 4}, {15}, {20}, {7, 8, 9}, {5, 6}, {16}, {19}, {18}, {17}, {23}},
    {{12}, {13}, {14}, {15}, {11}, {0, 1, 2, 22}, {3, 4, 5}, {16}, {21}, {8, 9, 10}, {6, 7}, {17}, {20}, {19}, {18}, {23}},
    {{21}, {11}, {12}, {13}, {20}, {0, 9, 10}, {1, 2, 3, 22}, {14}, {19}, {7, 8}, {4, 5, 6}, {15}, {23}, {18}, {17}, {16}},
    {{11}, {12}, {13}, {14}, {21}, {0, 1, 10, 22}, {2, 3, 4}, {15}, {20}, {8, 9}, {5, 6, 7}, {16}, {23}, {19}, {18}, {17}},
    {{12}, {13}, {14}, {15}, {11}, {0, 1, 2, 22}, {3, 4, 5}, {16}, {21}, {9, 10}, {6, 7, 8}, {17}, {23}, {20}, {19}, {18}},
    {{23}, {11}, {12}, {13}, {21}, {0, 10}, {1, 2, 3, 22}, {14}, {20}, {7, 8, 9}, {4, 5, 6}, {15}, {19}, {18}, {17}, {16}},
};

// Frame used when the twisted prism has no 4-cycle: a 10-cycle x0..x9 with
// extra vertices u on edge (x0,x1) and v on edge (x2,x3), and a partner
// 8-cycle a, b, y4..y9 with rungs x0-a, x1-a, x2-b, x3-b, x4-y4, ..., x9-y9.
// Ids: x0..x9 = 0..9, u = 10, v = 11, a = 12, b = 13, y4..y9 = 14..19.
const std::vector<std::vector<int>> kGrid4InFrame = {
    {10}, {1}, {2},  {11}, {0},  {12}, {13}, {3},
    {9},  {17, 18, 19}, {14, 15, 16}, {4}, {8}, {7}, {6}, {5},
};

}  // namespace

Graph grid_embedding_frame() {
  Graph g(20);
  auto X = [](int t) { return t; };
  const int U = 10, V = 11, A = 12, B = 13;
  auto Y = [](int t) { return 14 + (t - 4); };
  g.add_edge(X(0), U);
  g.add_edge(U, X(1));
  g.add_edge(X(1), X(2));
  g.add_edge(X(2), V);
  g.add_edge(V, X(3));
  for (int t = 3; t < 9; ++t) g.add_edge(X(t), X(t + 1));
  g.add_edge(X(9), X(0));
  g.add_edge(A, B);
  g.add_edge(B, Y(4));
  for (int t = 4; t < 9; ++t) g.add_edge(Y(t), Y(t + 1));
  g.add_edge(Y(9), A);
  g.add_edge(X(0), A);
  g.add_edge(X(1), A);
  g.add_edge(X(2), B);
  g.add_edge(X(3), B);
  for (int t = 4; t <= 9; ++t) g.add_edge(X(t), Y(t));
  return g;
}

Graph padded_ladder_host(int offset) {
  if (offset < 0 || offset > 10) throw std::invalid_argument("padded_ladder_host: offset in 0..10");
  Graph g(24);
  for (int k = 0; k < 11; ++k) {
    if (k != 0) g.add_edge(k, (k + 1) % 11);
    if (k != offset) g.add_edge(11 + k, 11 + (k + 1) % 11);
    g.add_edge(k, 11 + k);
  }
  g.add_edge(0, 22);
  g.add_edge(22, 1);
  g.add_edge(11 + offset, 23);
  g.add_edge(23, 11 + (offset + 1) % 11);
  return g;
}

MinorModel grid4_in_padded_ladder_model(int offset) {
  if (offset < 0 || offset > 10)
    throw std::invalid_argument("grid4_in_padded_ladder_model: offset in 0..10");
  return MinorModel{kGrid4InLadder12[offset]};
}

MinorModel grid4_in_frame_model() {
  if (kGrid4InFrame.empty()) throw std::logic_error("grid4_in_frame_model: table unset");
  return MinorModel{kGrid4InFrame};
}

namespace {

constexpr int kCore = 75;

int mod1(int x, int m) {  // into 1..m
  int r = (x - 1) % m;
  if (r < 0) r += m;
  return r + 1;
}

// Cyclic run of 1-based indices [from, to_excl) on a cycle of length m.
std::vector<int> cyclic_run(int from, int to_excl, int m) {
  std::vector<int> out;
  for (int t = from; t != to_excl; t = mod1(t + 1, m)) out.push_back(t);
  return out;
}

// View of a 75-prism with the outer indices rotated and the matching values
// rotated (and possibly reflected) so that the selected structure sits in a
// standard position.
struct NormalizedPrism {
  const TwistedPrismSpec* spec = nullptr;
  int vshift = 0;   // normalized index t -> original outer index t + vshift
  int wshift = 0;   // rotation subtracted from matching values
  bool wflip = false;

  int orig_v(int t) const { return mod1(t + vshift, kCore); }
  int pi_hat(int t) const {
    int raw = mod1(spec->pi[orig_v(t) - 1] - wshift, kCore);
    if (!wflip || raw == kCore) return raw;
    return kCore - raw;
  }
  int orig_w(int u) const {
    if (wflip && u != kCore) u = kCore - u;
    return mod1(u + wshift, kCore);
  }
  int v_gid(int t) const { return orig_v(t) - 1; }
  int w_gid(int u) const { return kCore + orig_w(u) - 1; }
};

// A set of rungs selected by a monotone subsequence of the normalized
// matching.  Rungs are listed in outer cyclic order; their values appear in
// a consistent cyclic order on the inner cycle (checked), so the arcs
// between consecutive rungs tile both cycles in aligned fashion.
struct Selection {
  NormalizedPrism np;
  std::vector<int> R;           // ascending normalized outer indices
  std::vector<int> rank;        // value rank of each rung
  std::vector<int> sorted_vals;
  int m = 0;

  std::vector<int> outer_arc(int k) const {  // attachment vertex first
    std::vector<int> out;
    for (int t : cyclic_run(R[k], R[(k + 1) % m], kCore)) out.push_back(np.v_gid(t));
    return out;
  }
  std::vector<int> inner_arc(int r) const {  // indexed by rank
    std::vector<int> out;
    for (int u : cyclic_run(sorted_vals[r], sorted_vals[(r + 1) % m], kCore))
      out.push_back(np.w_gid(u));
    return out;
  }
};

Selection make_selection(const NormalizedPrism& np, std::vector<int> R) {
  Selection s;
  s.np = np;
  s.R = std::move(R);
  s.m = static_cast<int>(s.R.size());
  std::vector<int> vals;
  for (int t : s.R) vals.push_back(np.pi_hat(t));
  s.sorted_vals = vals;
  std::sort(s.sorted_vals.begin(), s.sorted_vals.end());
  s.rank.resize(s.m);
  for (int k = 0; k < s.m; ++k)
    s.rank[k] = static_cast<int>(
        std::lower_bound(s.sorted_vals.begin(), s.sorted_vals.end(), vals[k]) -
        s.sorted_vals.begin());
  int d = (s.rank[1] - s.rank[0] + s.m) % s.m;
  if (d != 1 && d != s.m - 1) throw std::logic_error("rung selection misaligned");
  for (int k = 0; k < s.m; ++k)
    if ((s.rank[(k + 1) % s.m] - s.rank[k] + s.m) % s.m != d)
      throw std::logic_error("rung selection misaligned");
  return s;
}

// With 11 aligned rungs the prism contracts onto the padded ladder: each
// branch set is the half-open arc from one rung to the next, except that on
// each cycle one arc of size >= 2 (which exists, 75 > 11) donates its
// interior to a spare subdivision vertex.  Returns the inner spare's edge
// offset together with the model.
std::pair<int, MinorModel> ladder_model_in_prism(const Selection& sel) {
  int m = sel.m;  // 11
  int d = (sel.rank[1] - sel.rank[0] + m) % m;  // +1 or m-1, checked earlier
  std::vector<int> invrank(m);
  for (int k = 0; k < m; ++k) invrank[sel.rank[k]] = k;
  int ka = -1, rb = -1;
  for (int k = 0; k < m && ka < 0; ++k)
    if (sel.outer_arc(k).size() >= 2) ka = k;
  for (int r = 0; r < m && rb < 0; ++r)
    if (sel.inner_arc(r).size() >= 2) rb = r;
  if (ka < 0 || rb < 0) throw std::logic_error("ladder_model_in_prism: no spare vertex");
  // Relabel rungs so the outer spare sits on ladder edge 0.
  int b_raw = (d == 1) ? invrank[rb] : (invrank[rb] + m - 1) % m;
  int offset = (b_raw - ka + m) % m;
  MinorModel model;
  model.branch_sets.resize(24);
  for (int t = 0; t < m; ++t) {
    auto oarc = sel.outer_arc((ka + t) % m);
    if (t == 0) {
      model.branch_sets[0] = {oarc[0]};
      model.branch_sets[22].assign(oarc.begin() + 1, oarc.end());
    } else {
      model.branch_sets[t] = oarc;
    }
    int r = sel.rank[(ka + t) % m];
    auto iarc = sel.inner_arc(r);
    if (r == rb) {
      model.branch_sets[11 + t] = {iarc[0]};
      model.branch_sets[23].assign(iarc.begin() + 1, iarc.end());
    } else {
      model.branch_sets[11 + t] = iarc;
    }
  }
  return {offset, model};
}

std::optional<int> find_triple(const std::vector<int>& arc_sizes) {
  int m = static_cast<int>(arc_sizes.size());
  for (int k = 0; k < m; ++k)
    if (arc_sizes[k] >= 2 && arc_sizes[(k + 2) % m] >= 2) return k;
  return std::nullopt;
}

// With 10 aligned rungs and two subdivided edges at distance two on one of
// the cycles, the prism contracts onto the frame of grid_embedding_frame().
MinorModel frame_model_in_prism(const Selection& sel) {
  int m = sel.m;  // 10
  std::vector<std::vector<int>> primary(m), partner(m);
  std::vector<int> osz(m), isz(m);
  for (int k = 0; k < m; ++k) osz[k] = static_cast<int>(sel.outer_arc(k).size());
  for (int r = 0; r < m; ++r) isz[r] = static_cast<int>(sel.inner_arc(r).size());
  int k0;
  if (auto ko = find_triple(osz)) {
    for (int k = 0; k < m; ++k) {
      primary[k] = sel.outer_arc(k);
      partner[k] = sel.inner_arc(sel.rank[k]);
    }
    k0 = *ko;
  } else if (auto ki = find_triple(isz)) {
    std::vector<int> invrank(m);
    for (int k = 0; k < m; ++k) invrank[sel.rank[k]] = k;
    for (int r = 0; r < m; ++r) {
      primary[r] = sel.inner_arc(r);
      partner[r] = sel.outer_arc(invrank[r]);
    }
    k0 = *ki;
  } else {
    // A 4-cycle-free matching always admits such a pair on one of the
    // cycles; reaching this line means the input had a 4-cycle after all.
    throw std::logic_error("frame_model_in_prism: no subdivided edge pair found");
  }
  auto at = [&](int t) { return (k0 + t) % m; };
  MinorModel fm;
  fm.branch_sets.resize(20);
  for (int t = 0; t < 10; ++t) {
    const auto& arc = primary[at(t)];
    std::vector<int> set{arc[0]};
    // Interiors of the two subdivided edges become separate branch sets.
    if (t != 0 && t != 2) set.insert(set.end(), arc.begin() + 1, arc.end());
    fm.branch_sets[t] = set;
  }
  fm.branch_sets[10].assign(primary[at(0)].begin() + 1, primary[at(0)].end());
  fm.branch_sets[11].assign(primary[at(2)].begin() + 1, primary[at(2)].end());
  auto join = [&](int a, int b) {
    auto out = partner[at(a)];
    out.insert(out.end(), partner[at(b)].begin(), partner[at(b)].end());
    return out;
  };
  fm.branch_sets[12] = join(0, 1);
  fm.branch_sets[13] = join(2, 3);
  for (int t = 4; t <= 9; ++t) fm.branch_sets[14 + (t - 4)] = partner[at(t)];
  return fm;
}

MinorModel search_intermediate(const Graph& inter) {
  auto found = find_minor_model(inter, make_grid(4, 4), MinorSearchCaps{16, 40});
  if (!found)
    throw std::runtime_error("twisted_prism_grid_model: intermediate embedding not found");
  return *found;
}

MinorModel grid_in_ladder(int offset) {
  if (!kGrid4InLadder12[offset].empty()) return MinorModel{kGrid4InLadder12[offset]};
  return search_intermediate(padded_ladder_host(offset));
}

MinorModel grid_in_frame() {
  if (!kGrid4InFrame.empty()) return MinorModel{kGrid4InFrame};
  return search_intermediate(grid_embedding_frame());
}

// Model of the 4x4 grid in an exactly-75 twisted prism.
MinorModel core_grid_model(const TwistedPrismSpec& spec) {
  // A 4-cycle exists iff some pair of consecutive rungs has cyclically
  // adjacent matching values.
  int four = -1;
  for (int i = 1; i <= kCore && four < 0; ++i) {
    int j = mod1(i + 1, kCore);
    int diff = mod1(spec.pi[j - 1] - spec.pi[i - 1], kCore);
    if (diff == 1 || diff == kCore - 1) four = i;
  }
  if (four >= 1) {
    // Put the 4-cycle across the seam: pi_hat(75) = 75 and pi_hat(1) = 1.
    NormalizedPrism np{&spec, four, spec.pi[four - 1], false};
    int first = np.pi_hat(1);
    if (first == kCore - 1) {
      np.wflip = true;
      first = np.pi_hat(1);
    }
    if (first != 1) throw std::logic_error("core_grid_model: seam normalization failed");
    std::vector<int> seq;
    for (int t = 2; t <= kCore - 1; ++t) seq.push_back(np.pi_hat(t));
    auto es = es_monotone(seq, 9, 10);
    std::vector<int> R{1};
    for (int idx : es.indices) R.push_back(idx + 2);
    if (es.increasing) R.push_back(kCore);
    auto sel = make_selection(np, R);
    auto [offset, mid] = ladder_model_in_prism(sel);
    return compose_models(mid, grid_in_ladder(offset));
  }
  // No 4-cycle: only rotate values so pi_hat(75) = 75.
  NormalizedPrism np{&spec, 0, spec.pi[kCore - 1], false};
  std::vector<int> seq;
  for (int t = 1; t <= kCore - 1; ++t) seq.push_back(np.pi_hat(t));
  auto es = es_monotone(seq, 9, 9);
  std::vector<int> R;
  for (int idx : es.indices) R.push_back(idx + 1);
  R.push_back(kCore);
  auto sel = make_selection(np, R);
  return compose_models(frame_model_in_prism(sel), grid_in_frame());
}

// Contract a twisted l-prism (l > 75) onto a twisted 75-prism: keep the 75
// lowest-index rungs, collapse the outer arc tail into the last kept outer
// vertex and each inner arc between consecutive kept values into one vertex.
std::pair<TwistedPrismSpec, MinorModel> reduce_prism(const TwistedPrismSpec& spec) {
  int l = spec.l;
  std::vector<int> kept(spec.pi.begin(), spec.pi.begin() + kCore);
  std::vector<int> sorted = kept;
  std::sort(sorted.begin(), sorted.end());
  TwistedPrismSpec small;
  small.l = kCore;
  for (int k = 0; k < kCore; ++k)
    small.pi.push_back(static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), kept[k]) - sorted.begin() + 1));
  MinorModel m;
  m.branch_sets.resize(2 * kCore);
  for (int k = 0; k < kCore - 1; ++k) m.branch_sets[k] = {k};
  for (int t = kCore - 1; t < l; ++t) m.branch_sets[kCore - 1].push_back(t);
  for (int j = 0; j < kCore; ++j)
    for (int u : cyclic_run(sorted[j], sorted[(j + 1) % kCore], l))
      m.branch_sets[kCore + j].push_back(l + u - 1);
  return {small, m};
}

}  // namespace

MinorModel twisted_prism_grid_model(const TwistedPrismSpec& spec) {
  int l = spec.l;
  if (l < kCore) throw std::invalid_argument("twisted_prism_grid_model: need l >= 75");
  if (static_cast<int>(spec.pi.size()) != l)
    throw std::invalid_argument("twisted_prism_grid_model: permutation size mismatch");
  {
    std::vector<char> seen(l + 1, 0);
    for (int x : spec.pi) {
      if (x < 1 || x > l || seen[x])
        throw std::invalid_argument("twisted_prism_grid_model: not a permutation");
      seen[x] = 1;
    }
  }
  MinorModel result;
  if (l == kCore) {
    result = core_grid_model(spec);
  } else {
    auto [small, reduction] = reduce_prism(spec);
    result = compose_models(reduction, core_grid_model(small));
  }
  auto check = validate_minor_model(make_twisted_prism(spec), make_grid(4, 4), result);
  if (!check.valid)
    throw std::logic_error("twisted_prism_grid_model: built model invalid: " + check.reason);
  return result;
}

// ---- subdivision re-embedding ----

namespace {

// Route templates through one s x s block, as (row, col) offsets from the
// block's anchor vertex.  The anchor-to-anchor path for a row-direction edge
// uses columns [0, v); a column-direction edge uses the anchor row plus
// columns [v, s).  Routes of distinct template instances are disjoint.
std::vector<std::pair<int, int>> row_route_offsets(int s, int v) {
  std::vector<std::pair<int, int>> p{{0, 0}};
  if (s == 2) {
    p.push_back({1, 0});
    p.push_back({2, 0});
    return p;
  }
  int rows = (s % 2 == 1) ? s - 1 : s - 2;  // even number of snaked rows
  for (int j = 1; j <= rows; ++j) {
    if (j % 2 == 1)
      for (int c = 0; c < v; ++c) p.push_back({j, c});
    else
      for (int c = v - 1; c >= 0; --c) p.push_back({j, c});
  }
  if (s % 2 == 0) p.push_back({s - 1, 0});
  p.push_back({s, 0});
  return p;
}

std::vector<std::pair<int, int>> col_route_offsets(int s, int v) {
  std::vector<std::pair<int, int>> p{{0, 0}};
  if (s == 2) {
    p.push_back({0, 1});
    p.push_back({0, 2});
    return p;
  }
  for (int c = 1; c <= v; ++c) p.push_back({0, c});
  p.push_back({1, v});
  int avail = s - 1 - v;        // snake columns v .. s-2
  int q = avail - (avail % 2);  // even count so the snake ends at row 1
  for (int t = 0; t < q; ++t) {
    int col = v + t;
    if (t % 2 == 0)
      for (int r = (t == 0 ? 2 : 1); r <= s - 1; ++r) p.push_back({r, col});
    else
      for (int r = s - 1; r >= 1; --r) p.push_back({r, col});
  }
  int reached = (q > 0) ? v + q - 1 : v;
  for (int c = reached + 1; c <= s - 1; ++c) p.push_back({1, c});
  p.push_back({0, s - 1});
  p.push_back({0, s});
  return p;
}

}  // namespace

SubdivisionGridResult subdivision_grid_model(const Graph& h, const MinorModel& h_in_grid,
                                             int g,
                                             const std::map<std::pair<int, int>, int>& counts,
                                             int l) {
  if (l < 1) throw std::invalid_argument("subdivision_grid_model: need l >= 1");
  if (g < 1) throw std::invalid_argument("subdivision_grid_model: need g >= 1");
  Graph small = make_grid(g, g);
  {
    auto chk = validate_minor_model(small, h, h_in_grid);
    if (!chk.valid)
      throw std::invalid_argument("subdivision_grid_model: input model invalid: " + chk.reason);
  }
  for (const auto& [e, c] : counts)
    if (c >= l)
      throw std::invalid_argument("subdivision_grid_model: subdivision count must be < l");
  Graph sub = subdivide(h, counts);  // validates the key set

  // Block scale: smallest s with s >= 2*sqrt(l).
  int s = static_cast<int>(std::ceil(2.0 * std::sqrt(static_cast<double>(l))));
  while (s * s < 4 * l) ++s;
  while (s >= 2 && (s - 1) * (s - 1) >= 4 * l) --s;
  int S = s * g;

  // Pick the channel split maximizing the smaller route capacity.
  int best_v = 1, best_cap = -1;
  for (int v = 1; v <= std::max(1, s - 2); ++v) {
    int cap = static_cast<int>(std::min(row_route_offsets(s, v).size(),
                                        col_route_offsets(s, v).size())) -
              2;
    if (cap > best_cap) {
      best_cap = cap;
      best_v = v;
    }
  }
  if (best_cap < l - 1)
    throw std::logic_error("subdivision_grid_model: route capacity below l-1");

  auto big_id = [&](int row, int col) { return row * S + col; };
  // Anchor-to-anchor route for a small-grid edge (c1 < c2, adjacent).
  auto route_ids = [&](int c1, int c2) {
    int a = c1 / g, b = c1 % g;
    auto offs = (c2 == c1 + g) ? row_route_offsets(s, best_v) : col_route_offsets(s, best_v);
    std::vector<int> ids;
    for (auto [dr, dc] : offs) ids.push_back(big_id(s * a + dr, s * b + dc));
    return ids;
  };

  std::vector<int> owner(g * g, -1);
  MinorModel model;
  model.branch_sets.resize(sub.n);
  for (int x = 0; x < h.n; ++x)
    for (int cell : h_in_grid.branch_sets[x]) {
      owner[cell] = x;
      model.branch_sets[x].push_back(big_id(s * (cell / g), s * (cell % g)));
    }
  // Edges inside one branch set keep their connecting routes.
  auto small_edges = small.edges();
  for (auto [c1, c2] : small_edges) {
    if (owner[c1] < 0 || owner[c1] != owner[c2]) continue;
    auto r = route_ids(c1, c2);
    model.branch_sets[owner[c1]].insert(model.branch_sets[owner[c1]].end(), r.begin() + 1,
                                        r.end() - 1);
  }
  // One representative routed edge per h-edge carries the subdivision
  // vertices; fresh ids follow the order used by subdivide().
  int fresh = h.n;
  for (auto e : h.edges()) {
    int c = counts.at(e);
    int rc1 = -1, rc2 = -1;
    bool fwd = true;
    for (auto [c1, c2] : small_edges) {
      if (owner[c1] == e.first && owner[c2] == e.second) {
        rc1 = c1, rc2 = c2, fwd = true;
        break;
      }
      if (owner[c1] == e.second && owner[c2] == e.first) {
        rc1 = c1, rc2 = c2, fwd = false;
        break;
      }
    }
    if (rc1 < 0) throw std::logic_error("subdivision_grid_model: edge lost");
    auto r = route_ids(rc1, rc2);
    std::vector<int> internals(r.begin() + 1, r.end() - 1);
    if (!fwd) std::reverse(internals.begin(), internals.end());
    if (c == 0) {
      auto& dst = model.branch_sets[e.first];
      dst.insert(dst.end(), internals.begin(), internals.end());
      continue;
    }
    // Singletons, with the tail absorbed by the last subdivision vertex.
    int idx = 0;
    for (int k = 0; k < c; ++k) {
      int take = (k == c - 1) ? static_cast<int>(internals.size()) - idx : 1;
      model.branch_sets[fresh + k].assign(internals.begin() + idx,
                                          internals.begin() + idx + take);
      idx += take;
    }
    fresh += c;
  }

  Graph big = make_grid(S, S);
  auto chk = validate_minor_model(big, sub, model);
  if (!chk.valid)
    throw std::logic_error("subdivision_grid_model: built model invalid: " + chk.reason);
  return {std::move(sub), S, std::move(model)};
}

// ---- cycle packing and transversal ----

namespace {

// Shortest cycle in the graph induced by `alive`, as a vertex list; empty
// when acyclic.
std::vector<int> shortest_cycle(const Graph& g, uint64_t alive) {
  std::vector<int> best;
  for (auto [eu, ev] : g.edges()) {
    if (!((alive >> eu) & 1) || !((alive >> ev) & 1)) continue;
    // Shortest eu-ev path avoiding the edge itself.
    std::vector<int> par(g.n, -2);
    std::queue<int> q;
    q.push(eu);
    par[eu] = -1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (u == ev) break;
      for (int v : g.neighbors(u)) {
        if (!((alive >> v) & 1) || par[v] != -2) continue;
        if (u == eu && v == ev) continue;
        par[v] = u;
        q.push(v);
      }
    }
    if (par[ev] == -2) continue;
    std::vector<int> cyc;
    for (int v = ev; v != -1; v = par[v]) cyc.push_back(v);
    if (best.empty() || cyc.size() < best.size()) best = cyc;
  }
  return best;
}

struct PackingSearch {
  const Graph* g;
  int best = 0;
  std::vector<std::vector<int>> best_cycles;

  // Chordless cycles through v inside alive, reported to `sink`.
  void chordless_from(int v, uint64_t alive, std::vector<int>& path, uint64_t on_path,
                      const std::function<void(const std::vector<int>&)>& sink) {
    int u = path.back();
    for (int w : g->neighbors(u)) {
      if (!((alive >> w) & 1) || ((on_path >> w) & 1) || w == v) continue;
      // Chordless: w may touch the path only at u.
      bool chord = false;
      for (int p : path)
        if (p != u && p != v && g->has_edge(w, p)) {
          chord = true;
          break;
        }
      if (chord) continue;
      path.push_back(w);
      if (path.size() >= 3 && g->has_edge(w, v)) {
        if (path[1] < w) sink(path);  // direction dedupe
      } else {
        chordless_from(v, alive, path, on_path | (1ULL << w), sink);
      }
      path.pop_back();
    }
  }

  void rec(uint64_t alive, int count, std::vector<std::vector<int>>& cycles) {
    if (count + std::popcount(alive) / 3 <= best) return;
    auto cyc = shortest_cycle(*g, alive);
    if (cyc.empty()) {
      if (count > best) {
        best = count;
        best_cycles = cycles;
      }
      return;
    }
    if (count > best) {  // the packing so far already stands on its own
      best = count;
      best_cycles = cycles;
    }
    // Branch on the lowest vertex of a shortest cycle: either it is unused...
    int v = *std::min_element(cyc.begin(), cyc.end());
    rec(alive & ~(1ULL << v), count, cycles);
    // ...or some chordless cycle through it is in the packing.
    std::vector<int> path{v};
    chordless_from(v, alive, path, 1ULL << v, [&](const std::vector<int>& c) {
      uint64_t cm = 0;
      for (int x : c) cm |= 1ULL << x;
      cycles.push_back(c);
      rec(alive & ~cm, count + 1, cycles);
      cycles.pop_back();
    });
  }
};

struct FvsSearch {
  const Graph* g;

  bool rec(uint64_t alive, int budget, std::vector<int>& removed) {
    auto cyc = shortest_cycle(*g, alive);
    if (cyc.empty()) return true;
    if (budget == 0) return false;
    std::sort(cyc.begin(), cyc.end());
    for (int v : cyc) {
      removed.push_back(v);
      if (rec(alive & ~(1ULL << v), budget - 1, removed)) return true;
      removed.pop_back();
    }
    return false;
  }
};

}  // namespace

CyclePackingResult cycle_packing_exact(const Graph& g) {
  if (g.n > 25) throw CapError("cycle_packing_exact: cap is n <= 25");
  PackingSearch ps;
  ps.g = &g;
  uint64_t alive = g.n == 0 ? 0 : (g.n == 64 ? ~0ULL : (1ULL << g.n) - 1);
  std::vector<std::vector<int>> cycles;
  ps.best = -1;
  ps.rec(alive, 0, cycles);
  CyclePackingResult out;
  out.count = std::max(0, ps.best);
  out.cycles = ps.best_cycles;
  return out;
}

CycleTransversalResult cycle_transversal_exact(const Graph& g) {
  if (g.n > 25) throw CapError("cycle_transversal_exact: cap is n <= 25");
  FvsSearch fs;
  fs.g = &g;
  uint64_t alive = g.n == 0 ? 0 : (g.n == 64 ? ~0ULL : (1ULL << g.n) - 1);
  for (int k = 0;; ++k) {
    std::vector<int> removed;
    if (fs.rec(alive, k, removed)) {
      CycleTransversalResult out;
      out.size = k;
      out.vertices = removed;
      return out;
    }
  }
}

}  // namespace minorlab
