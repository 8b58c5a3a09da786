#include "minorlab/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "minorlab/decomposition.hpp"
#include "minorlab/errors.hpp"
#include "minorlab/io.hpp"
#include "minorlab/minor.hpp"
#include "minorlab/rng.hpp"

namespace minorlab {

namespace {

const char* kFamilyNames[] = {
    "forest",          "cycle",        "complete_bipartite_2t", "wheel_RT",
    "wheel_ours",      "apex_forest",  "twisted_prism",          "prism_or_grid",
    "grid_4x4",        "disjoint_cycles_r2", "disjoint_cycles_general",
    "subdivision_r_edges",
};

long long param(const BoundEntry& e, const std::string& key) {
  auto it = e.params.find(key);
  if (it == e.params.end())
    throw std::invalid_argument("f_upper: missing parameter '" + key + "' for family " +
                                bound_family_name(e.family));
  return it->second;
}

// Smallest c >= 0 with c*c >= x.
long long ceil_sqrt(long long x) {
  long long c = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (c * c < x) ++c;
  while (c > 0 && (c - 1) * (c - 1) >= x) --c;
  return c;
}

// ceil((1 + sqrt(m)) / 4) for integer m >= 0.
long long ceil_quarter_one_plus_sqrt(long long m) {
  long long q = 1;
  while ((4 * q - 1) * (4 * q - 1) < m) ++q;
  return q;
}

void parallel_for(long long count, int jobs, const std::function<void(long long)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  std::vector<std::thread> workers;
  for (int j = 0; j < jobs; ++j)
    workers.emplace_back([&] {
      for (long long i = next++; i < count; i = next++) fn(i);
    });
  for (auto& w : workers) w.join();
}

std::vector<Graph> all_graphs_up_to(int n_max) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n)
    for (const auto& g : enumerate_graphs(n)) out.push_back(g);
  return out;
}

Graph random_candidate(int n, uint64_t sseed, bool regular) {
  SplitMix64 rng{sseed};
  if (regular && n >= 4 && (3LL * n) % 2 == 0) {
    // Pairing model, retried until simple.
    for (int attempt = 0; attempt < 100; ++attempt) {
      std::vector<int> stubs;
      for (int v = 0; v < n; ++v)
        for (int c = 0; c < 3; ++c) stubs.push_back(v);
      for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i)
        std::swap(stubs[i], stubs[rng.next_below(i + 1)]);
      Graph g(n);
      bool ok = true;
      for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
        int u = stubs[i], v = stubs[i + 1];
        if (u == v || g.has_edge(u, v)) ok = false;
        else g.add_edge(u, v);
      }
      if (ok) return g;
    }
  }
  double p = (2.0 + 2.0 * rng.next_double()) / n;
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_double() < p) g.add_edge(u, v);
  return g;
}

}  // namespace

std::string bound_family_name(BoundFamily f) { return kFamilyNames[static_cast<int>(f)]; }

std::optional<BoundFamily> bound_family_from_name(const std::string& name) {
  for (int i = 0; i < static_cast<int>(std::size(kFamilyNames)); ++i)
    if (name == kFamilyNames[i]) return static_cast<BoundFamily>(i);
  return std::nullopt;
}

BoundValue f_upper(const BoundEntry& e) {
  BoundValue out;
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("f_upper: ") + what);
  };
  switch (e.family) {
    case BoundFamily::forest: {
      long long n = param(e, "n");
      require(n >= 2, "forest needs n >= 2");
      out.value = n - 2;
      break;
    }
    case BoundFamily::cycle: {
      long long n = param(e, "n");
      require(n >= 3, "cycle needs n >= 3");
      out.value = n - 2;
      break;
    }
    case BoundFamily::complete_bipartite_2t: {
      long long t = param(e, "t");
      require(t >= 2, "K_{2,t} entry needs t >= 2");
      out.value = 2 * t - 2;
      break;
    }
    case BoundFamily::wheel_RT: {
      long long k = param(e, "k");
      require(k >= 4, "wheel needs k >= 4");
      out.value = 36 * k - 39;
      break;
    }
    case BoundFamily::wheel_ours: {
      long long k = param(e, "k");
      require(k >= 4, "wheel needs k >= 4");
      out.value = 2 * k + 18 * ceil_quarter_one_plus_sqrt(2 * k - 1) - 10;
      break;
    }
    case BoundFamily::apex_forest: {
      long long n = param(e, "n");
      require(n >= 2, "apex forest needs n >= 2");
      out.value = (3 * n) / 2 - 3;
      break;
    }
    case BoundFamily::twisted_prism: {
      long long l = param(e, "l");
      require(l >= 3, "prism needs l >= 3");
      out.value = 2 * l + 18 * ceil_quarter_one_plus_sqrt(2 * l + 1) - 8;
      break;
    }
    case BoundFamily::prism_or_grid: {
      long long l = param(e, "l");
      require(l >= 3, "prism needs l >= 3");
      out.value = 2 * l + 10;
      break;
    }
    case BoundFamily::grid_4x4:
      out.value = 160;
      break;
    case BoundFamily::disjoint_cycles_r2: {
      // Strict bound n + 9/2 ceil(sqrt(4+n)) + 2, normalized to inclusive.
      long long n = param(e, "n");
      require(n >= 6, "two disjoint cycles need n >= 6");
      long long twice = 2 * n + 9 * ceil_sqrt(4 + n) + 4;
      out.value = (twice % 2 == 0) ? twice / 2 - 1 : (twice - 1) / 2;
      break;
    }
    case BoundFamily::disjoint_cycles_general: {
      long long n = param(e, "n");
      long long r = param(e, "r");
      require(r >= 3 && n >= 3 * r, "r >= 3 disjoint cycles need n >= 3r");
      out.symbolic = true;
      out.formula = "3n/2 + c r^2 log r with n=" + std::to_string(n) + ", r=" +
                    std::to_string(r) + "; c an unspecified absolute constant";
      break;
    }
    case BoundFamily::subdivision_r_edges: {
      long long n = param(e, "n");
      long long r = param(e, "r");
      require(r >= 1 && n >= 1, "subdivision entry needs n, r >= 1");
      out.symbolic = true;
      out.formula = "(r+1)/2 n + b_r with n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                    "; b_r := max{2r^2, 8r, 12 c_{8r}^2 g_{2r}^2} with unspecified c_{8r}, g_{2r}";
      break;
    }
  }
  return out;
}

long long entry_vertex_count(const BoundEntry& e) {
  switch (e.family) {
    case BoundFamily::forest:
    case BoundFamily::cycle:
    case BoundFamily::apex_forest:
    case BoundFamily::disjoint_cycles_r2:
    case BoundFamily::disjoint_cycles_general:
    case BoundFamily::subdivision_r_edges:
      return param(e, "n");
    case BoundFamily::complete_bipartite_2t:
      return param(e, "t") + 2;
    case BoundFamily::wheel_RT:
    case BoundFamily::wheel_ours:
      return param(e, "k");
    case BoundFamily::twisted_prism:
    case BoundFamily::prism_or_grid:
      return 2 * param(e, "l");
    case BoundFamily::grid_4x4:
      return 16;
  }
  throw std::invalid_argument("entry_vertex_count: unknown family");
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["h"] = graph_to_json(h);
  j["mode"] = mode;
  j["seed"] = seed;
  j["generated"] = generated;
  j["examined"] = examined;
  j["observed_max_tw"] = observed_max_tw;
  j["bound"] = bound;
  j["verdict"] = pass ? "pass" : "fail";
  j["witness"] = witness ? graph_to_json(*witness) : nlohmann::json(nullptr);
  return j;
}

VerificationReport empirical_f(const Graph& h, int n_max, int jobs) {
  if (n_max < 1 || n_max > 8) throw CapError("empirical_f: cap is 1 <= n_max <= 8");
  auto all = all_graphs_up_to(n_max);
  std::vector<int> tw(all.size(), -2);  // -2: has an h-minor, skipped
  parallel_for(static_cast<long long>(all.size()), jobs, [&](long long i) {
    if (!find_minor_model(all[i], h)) tw[i] = exact_treewidth(all[i]).width;
  });
  VerificationReport rep;
  rep.h = h;
  rep.mode = "exhaustive n_max=" + std::to_string(n_max);
  rep.generated = static_cast<long long>(all.size());
  for (size_t i = 0; i < all.size(); ++i) {
    if (tw[i] == -2) continue;
    ++rep.examined;
    if (tw[i] > rep.observed_max_tw) {
      rep.observed_max_tw = tw[i];
      rep.witness = all[i];
    }
  }
  rep.pass = true;
  if (rep.witness && find_minor_model(*rep.witness, h))
    throw std::logic_error("empirical_f: witness re-check failed");
  return rep;
}

VerificationReport verify_bound(const Graph& h, const BoundEntry& entry, ExhaustiveMode mode,
                                int jobs) {
  auto bv = f_upper(entry);
  if (bv.symbolic)
    throw std::invalid_argument("verify_bound: symbolic entry cannot be verified numerically");
  VerificationReport rep = empirical_f(h, mode.n_max, jobs);
  rep.bound = bv.value;
  rep.pass = rep.observed_max_tw <= rep.bound;
  return rep;
}

VerificationReport verify_bound(const Graph& h, const BoundEntry& entry, RandomMode mode,
                                int jobs) {
  auto bv = f_upper(entry);
  if (bv.symbolic)
    throw std::invalid_argument("verify_bound: symbolic entry cannot be verified numerically");
  if (mode.n < 1 || mode.n > 25)
    throw CapError("verify_bound: random mode needs 1 <= n <= 25 for exact treewidth");
  std::vector<uint64_t> seeds(mode.samples);
  {
    SplitMix64 base{mode.seed};
    for (auto& s : seeds) s = base.next();
  }
  std::vector<int> tw(mode.samples, -2);
  std::vector<Graph> gs(mode.samples);
  parallel_for(mode.samples, jobs, [&](long long i) {
    gs[i] = random_candidate(mode.n, seeds[i], i % 2 == 1);
    if (!find_minor_model(gs[i], h)) tw[i] = exact_treewidth(gs[i]).width;
  });
  VerificationReport rep;
  rep.h = h;
  rep.mode = "random n=" + std::to_string(mode.n) + " samples=" + std::to_string(mode.samples);
  rep.seed = mode.seed;
  rep.generated = mode.samples;
  rep.bound = bv.value;
  for (int i = 0; i < mode.samples; ++i) {
    if (tw[i] == -2) continue;
    ++rep.examined;
    if (tw[i] > rep.observed_max_tw) {
      rep.observed_max_tw = tw[i];
      rep.witness = gs[i];
    }
  }
  rep.pass = rep.observed_max_tw <= rep.bound;
  return rep;
}

VerificationReport verify_tree_composition(const Graph& h1, const Graph& t, int n_max,
                                           int jobs) {
  if (girth(t).has_value())
    throw std::invalid_argument("verify_tree_composition: t has a cycle");
  if (n_max < 1 || n_max > 7)
    throw CapError("verify_tree_composition: cap is 1 <= n_max <= 7");
  auto base = empirical_f(h1, n_max, jobs);
  Graph hu = disjoint_union(h1, t);
  auto all = all_graphs_up_to(n_max);
  std::vector<int> tw(all.size(), -2);
  parallel_for(static_cast<long long>(all.size()), jobs, [&](long long i) {
    if (!find_minor_model(all[i], hu)) tw[i] = exact_treewidth(all[i]).width;
  });
  VerificationReport rep;
  rep.h = hu;
  rep.mode = "tree-composition n_max=" + std::to_string(n_max);
  rep.generated = static_cast<long long>(all.size());
  rep.bound = base.observed_max_tw + t.n;
  for (size_t i = 0; i < all.size(); ++i) {
    if (tw[i] == -2) continue;
    ++rep.examined;
    if (tw[i] > rep.observed_max_tw) {
      rep.observed_max_tw = tw[i];
      rep.witness = all[i];
    }
  }
  rep.pass = rep.observed_max_tw <= rep.bound;
  return rep;
}

}  // namespace minorlab
