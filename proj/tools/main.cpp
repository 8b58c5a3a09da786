#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minorlab/bounds.hpp"
#include "minorlab/bramble.hpp"
#include "minorlab/certificates.hpp"
#include "minorlab/constructions.hpp"
#include "minorlab/decomposition.hpp"
#include "minorlab/errors.hpp"
#include "minorlab/graph.hpp"
#include "minorlab/io.hpp"
#include "minorlab/minor.hpp"
#include "minorlab/rng.hpp"

using namespace minorlab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << data;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::vector<int> random_permutation(int l, uint64_t seed) {
  auto pi = identity_permutation(l);
  SplitMix64 rng{seed};
  for (int i = l - 1; i > 0; --i) std::swap(pi[i], pi[rng.next_below(i + 1)]);
  return pi;
}

// ---- gen ----

struct GenArgs {
  std::string family;
  std::vector<int> params;
  std::string pi;
  std::string out;
  std::string format = "json";
};

int run_gen(const GenArgs& a) {
  auto need = [&](size_t k) {
    if (a.params.size() != k)
      throw std::invalid_argument("gen " + a.family + ": expected " + std::to_string(k) +
                                  " parameter(s)");
  };
  Graph g;
  if (a.family == "grid") {
    need(2);
    g = make_grid(a.params[0], a.params[1]);
  } else if (a.family == "cycle") {
    need(1);
    g = make_cycle(a.params[0]);
  } else if (a.family == "path") {
    need(1);
    g = make_path(a.params[0]);
  } else if (a.family == "complete") {
    need(1);
    g = make_complete(a.params[0]);
  } else if (a.family == "complete-bipartite") {
    need(2);
    g = make_complete_bipartite(a.params[0], a.params[1]);
  } else if (a.family == "wheel") {
    need(1);
    g = make_wheel(a.params[0]);
  } else if (a.family == "twisted-prism") {
    need(1);
    int l = a.params[0];
    TwistedPrismSpec spec{l, a.pi.empty() ? identity_permutation(l) : parse_int_list(a.pi)};
    g = make_twisted_prism(spec);
  } else {
    throw std::invalid_argument("unknown family: " + a.family);
  }
  std::string text;
  if (a.format == "json")
    text = graph_to_json(g).dump(2) + "\n";
  else if (a.format == "dimacs")
    text = graph_to_dimacs(g);
  else if (a.format == "dot")
    text = graph_to_dot(g);
  else
    throw std::invalid_argument("unknown format: " + a.format);
  write_output(a.out, text);
  return kExitPass;
}

// ---- tw ----

struct TwArgs {
  std::string graph_path;
  bool exact = false;
  bool heuristic = false;
  std::string cert;
};

int run_tw(const TwArgs& a) {
  Graph g = graph_from_text(read_file(a.graph_path));
  TreeDecomposition td;
  if (a.exact) {
    auto res = exact_treewidth(g);
    std::cout << res.width << "\n";
    td = res.decomposition;
    if (!a.cert.empty())
      write_output(a.cert, tree_decomposition_certificate(td, res.width).dump(2) + "\n");
    return kExitPass;
  }
  auto b = treewidth_bounds_heuristic(g);
  std::cout << "lower>=" << b.lower << " upper<=" << b.upper << "\n";
  if (!a.cert.empty())
    write_output(a.cert, tree_decomposition_certificate(b.upper_witness, b.upper).dump(2) + "\n");
  return kExitPass;
}

// ---- verify ----

int run_verify(const std::string& cert_path, const std::string& graph_path) {
  Graph g = graph_from_text(read_file(graph_path));
  nlohmann::json cert = nlohmann::json::parse(read_file(cert_path));
  auto res = verify_certificate(cert, g);
  nlohmann::json out;
  out["accepted"] = res.accepted;
  out["reason"] = res.reason;
  std::cout << out.dump() << "\n";
  return res.accepted ? kExitPass : kExitVerifyFail;
}

// ---- embed ----

struct EmbedArgs {
  std::string name;
  int ell = 75;
  int r = 1;
  int base_grid = 2;
  int l1 = 1, l2 = 1;
  uint64_t seed = 0;
  std::string pi;
  std::string cert;
  std::string graph_out;
};

int run_embed(const EmbedArgs& a) {
  Graph host, pattern;
  nlohmann::json cert;
  if (a.name == "twisted-prism-grid") {
    TwistedPrismSpec spec{a.ell,
                          a.pi.empty() ? random_permutation(a.ell, a.seed) : parse_int_list(a.pi)};
    host = make_twisted_prism(spec);
    pattern = make_grid(4, 4);
    auto m = twisted_prism_grid_model(spec);
    cert = minor_model_certificate(pattern, m);
  } else if (a.name == "grid-prism") {
    int L = grid_prism_length(a.r);
    host = make_grid(4 * a.r, 4 * a.r);
    pattern = make_twisted_prism({L, identity_permutation(L)});
    cert = minor_model_certificate(pattern, grid_prism_model(a.r));
  } else if (a.name == "phi") {
    // Scale the identity model of the base grid with seeded subdivision
    // counts below ell.
    Graph h = make_grid(a.base_grid, a.base_grid);
    MinorModel id;
    id.branch_sets.resize(h.n);
    for (int v = 0; v < h.n; ++v) id.branch_sets[v] = {v};
    SplitMix64 rng{a.seed};
    std::map<std::pair<int, int>, int> counts;
    for (auto e : h.edges()) counts[e] = static_cast<int>(rng.next_below(a.ell));
    auto res = subdivision_grid_model(h, id, a.base_grid, counts, a.ell);
    host = make_grid(res.grid_side, res.grid_side);
    pattern = res.subdivided_h;
    cert = minor_model_certificate(pattern, res.model);
  } else if (a.name == "band-cycles") {
    host = make_grid(a.base_grid, a.base_grid);
    auto [c1, c2] = grid_band_cycles(a.base_grid, a.l1, a.l2);
    cert = cycle_packing_certificate({c1, c2}, 2);
  } else {
    throw std::invalid_argument("unknown construction: " + a.name);
  }
  auto check = verify_certificate(cert, host);
  if (!check.accepted) {
    std::cerr << "self-verification failed: " << check.reason << "\n";
    return kExitVerifyFail;
  }
  write_output(a.cert, cert.dump(2) + "\n");
  if (!a.graph_out.empty()) write_output(a.graph_out, graph_to_json(host).dump(2) + "\n");
  return kExitPass;
}

// ---- check-bounds ----

struct CheckArgs {
  std::string suite = "default";
  std::string results;
  uint64_t seed = 0;
  int jobs = 1;
};

struct CaseRecord {
  std::string name;
  nlohmann::json record;
  bool pass = false;
  bool capped = false;
};

CaseRecord run_case(const std::string& name, const std::function<nlohmann::json(bool&)>& fn) {
  CaseRecord c;
  c.name = name;
  try {
    c.record = fn(c.pass);
  } catch (const CapError& e) {
    c.capped = true;
    c.record = {{"case", name}, {"verdict", "cap"}, {"error", e.what()}};
    return c;
  }
  c.record["case"] = name;
  return c;
}

int run_check_bounds(const CheckArgs& a) {
  bool full = a.suite == "full";
  if (!full && a.suite != "default")
    throw std::invalid_argument("unknown suite: " + a.suite);
  int n_small = full ? 7 : 6;
  std::vector<CaseRecord> cases;
  auto push_report = [&](const std::string& name, VerificationReport rep) {
    cases.push_back(run_case(name, [&](bool& pass) {
      pass = rep.pass;
      return rep.to_json();
    }));
  };

  // Catalog checks.
  cases.push_back(run_case("catalog_wheel_improvement", [&](bool& pass) {
    long long worst_margin = 1LL << 60;
    pass = true;
    for (long long k = 11; k <= 10000; ++k) {
      BoundEntry ours{BoundFamily::wheel_ours, {{"k", k}}, ""};
      BoundEntry rt{BoundFamily::wheel_RT, {{"k", k}}, ""};
      long long margin = f_upper(rt).value - f_upper(ours).value;
      worst_margin = std::min(worst_margin, margin);
      if (margin < 0) pass = false;
    }
    return nlohmann::json{{"mode", "catalog k=11..10000"},
                          {"worst_margin", worst_margin},
                          {"verdict", pass ? "pass" : "fail"}};
  }));
  cases.push_back(run_case("catalog_universal_lower_bound", [&](bool& pass) {
    pass = true;
    std::vector<BoundEntry> entries = {
        {BoundFamily::forest, {{"n", 5}}, ""},
        {BoundFamily::cycle, {{"n", 6}}, ""},
        {BoundFamily::complete_bipartite_2t, {{"t", 4}}, ""},
        {BoundFamily::wheel_RT, {{"k", 7}}, ""},
        {BoundFamily::wheel_ours, {{"k", 7}}, ""},
        {BoundFamily::apex_forest, {{"n", 6}}, ""},
        {BoundFamily::twisted_prism, {{"l", 75}}, ""},
        {BoundFamily::prism_or_grid, {{"l", 75}}, ""},
        {BoundFamily::grid_4x4, {}, ""},
        {BoundFamily::disjoint_cycles_r2, {{"n", 6}}, ""},
    };
    for (const auto& e : entries)
      if (f_upper(e).value < entry_vertex_count(e) - 2) pass = false;
    return nlohmann::json{{"mode", "catalog"}, {"verdict", pass ? "pass" : "fail"}};
  }));
  cases.push_back(run_case("catalog_grid_4x4_constant", [&](bool& pass) {
    BoundEntry e{BoundFamily::grid_4x4, {}, ""};
    pass = f_upper(e).value == 160;
    return nlohmann::json{{"mode", "catalog"},
                          {"value", f_upper(e).value},
                          {"verdict", pass ? "pass" : "fail"}};
  }));

  // Exhaustive bound checks on small graphs.
  {
    BoundEntry e{BoundFamily::cycle, {{"n", 4}}, ""};
    push_report("cycle_c4", verify_bound(make_cycle(4), e, ExhaustiveMode{n_small}, a.jobs));
  }
  {
    BoundEntry e{BoundFamily::forest, {{"n", 4}}, ""};
    push_report("forest_p4", verify_bound(make_path(4), e, ExhaustiveMode{n_small}, a.jobs));
  }
  {
    BoundEntry e{BoundFamily::complete_bipartite_2t, {{"t", 3}}, ""};
    push_report("k23", verify_bound(make_complete_bipartite(2, 3), e, ExhaustiveMode{n_small},
                                    a.jobs));
  }
  {
    BoundEntry e{BoundFamily::disjoint_cycles_r2, {{"n", 6}}, ""};
    push_report("two_triangles",
                verify_bound(disjoint_union(make_cycle(3), make_cycle(3)), e,
                             ExhaustiveMode{n_small}, a.jobs));
  }
  push_report("tree_composition_c3_k1",
              verify_tree_composition(make_cycle(3), Graph(1), n_small, a.jobs));
  if (full) {
    {
      BoundEntry e{BoundFamily::cycle, {{"n", 5}}, ""};
      push_report("cycle_c5", verify_bound(make_cycle(5), e, ExhaustiveMode{7}, a.jobs));
    }
    {
      BoundEntry e{BoundFamily::wheel_ours, {{"k", 5}}, ""};
      push_report("wheel5_random",
                  verify_bound(make_wheel(5), e, RandomMode{12, 500, a.seed}, a.jobs));
    }
    push_report("tree_composition_c3_p2",
                verify_tree_composition(make_cycle(3), make_path(2), n_small, a.jobs));
    push_report("tree_composition_c4_k1",
                verify_tree_composition(make_cycle(4), Graph(1), n_small, a.jobs));
  }

  // Results path: flag, then MINORLAB_RESULTS, then default.
  std::string results = a.results;
  if (results.empty()) {
    const char* env = std::getenv("MINORLAB_RESULTS");
    results = env ? env : "results.jsonl";
  }
  {
    std::ofstream out(results, std::ios::app);
    if (!out) throw std::invalid_argument("cannot write results file: " + results);
    for (const auto& c : cases) out << c.record.dump() << "\n";
  }
  int fails = 0, caps = 0;
  for (const auto& c : cases) {
    if (c.capped) ++caps;
    else if (!c.pass) ++fails;
    std::cout << (c.capped ? "cap " : c.pass ? "pass" : "FAIL") << "  " << c.name << "\n";
  }
  std::cout << cases.size() << " cases, " << fails << " failures, " << caps << " capped\n";
  return fails == 0 ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph minor and treewidth workbench"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* cgen = app.add_subcommand("gen", "generate a graph");
  cgen->add_option("family", gen.family)->required();
  cgen->add_option("params", gen.params);
  cgen->add_option("--pi", gen.pi, "matching permutation, comma separated");
  cgen->add_option("--out", gen.out);
  cgen->add_option("--format", gen.format)->check(CLI::IsMember({"json", "dimacs", "dot"}));

  TwArgs tw;
  auto* ctw = app.add_subcommand("tw", "treewidth of a graph file");
  ctw->add_option("graph", tw.graph_path)->required();
  ctw->add_flag("--exact", tw.exact);
  ctw->add_flag("--heuristic", tw.heuristic);
  ctw->add_option("--cert", tw.cert);

  std::string vcert, vgraph;
  auto* cver = app.add_subcommand("verify", "check a certificate against a graph");
  cver->add_option("certificate", vcert)->required();
  cver->add_option("graph", vgraph)->required();

  EmbedArgs embed;
  auto* cemb = app.add_subcommand("embed", "run a construction and emit its certificate");
  cemb->add_option("name", embed.name)->required();
  cemb->add_option("--ell", embed.ell);
  cemb->add_option("--r", embed.r);
  cemb->add_option("--base-grid", embed.base_grid);
  cemb->add_option("--l1", embed.l1);
  cemb->add_option("--l2", embed.l2);
  cemb->add_option("--seed", embed.seed);
  cemb->add_option("--pi", embed.pi);
  cemb->add_option("--cert", embed.cert);
  cemb->add_option("--graph-out", embed.graph_out);

  CheckArgs chk;
  auto* cchk = app.add_subcommand("check-bounds", "run the bound verification suite");
  cchk->add_option("--suite", chk.suite)->check(CLI::IsMember({"default", "full"}));
  cchk->add_option("--results", chk.results);
  cchk->add_option("--seed", chk.seed);
  cchk->add_option("--jobs", chk.jobs);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cgen) return run_gen(gen);
    if (*ctw) {
      if (!tw.exact && !tw.heuristic)
        throw std::invalid_argument("tw: pass --exact or --heuristic");
      try {
        return run_tw(tw);
      } catch (const CapError& e) {
        if (tw.exact && !tw.heuristic) {
          std::cerr << "cap exceeded: " << e.what() << "\n";
          return kExitCapExceeded;
        }
        throw;
      }
    }
    if (*cver) return run_verify(vcert, vgraph);
    if (*cemb) return run_embed(embed);
    if (*cchk) return run_check_bounds(chk);
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
