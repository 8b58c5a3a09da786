#include "minorlab/certificates.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "minorlab/errors.hpp"
#include "minorlab/io.hpp"

namespace minorlab {

namespace {

nlohmann::json sets_to_json(const std::vector<std::vector<int>>& sets) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : sets) arr.push_back(s);
  return arr;
}

bool read_sets(const nlohmann::json& j, const char* key, std::vector<std::vector<int>>& out,
               std::string& err) {
  if (!j.contains(key) || !j[key].is_array()) {
    err = std::string("missing or non-array field '") + key + "'";
    return false;
  }
  for (const auto& row : j[key]) {
    if (!row.is_array()) {
      err = std::string("field '") + key + "' has a non-array element";
      return false;
    }
    std::vector<int> s;
    for (const auto& x : row) {
      if (!x.is_number_integer()) {
        err = std::string("field '") + key + "' has a non-integer vertex";
        return false;
      }
      s.push_back(x.get<int>());
    }
    out.push_back(std::move(s));
  }
  return true;
}

bool read_int(const nlohmann::json& j, const char* key, long long& out, std::string& err) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    err = std::string("missing or non-integer field '") + key + "'";
    return false;
  }
  out = j[key].get<long long>();
  return true;
}

CertificateResult reject(std::string reason) { return {false, std::move(reason)}; }

CertificateResult verify_tree_decomposition_cert(const nlohmann::json& cert, const Graph& g) {
  TreeDecomposition td;
  std::string err;
  if (!read_sets(cert, "bags", td.bags, err)) return reject(err);
  std::vector<std::vector<int>> edges;
  if (!read_sets(cert, "tree_edges", edges, err)) return reject(err);
  for (const auto& e : edges) {
    if (e.size() != 2) return reject("tree edge is not a pair");
    td.tree_edges.emplace_back(e[0], e[1]);
  }
  long long claimed;
  if (!read_int(cert, "claimed_width", claimed, err)) return reject(err);
  auto res = validate_tree_decomposition(g, td);
  if (!res.valid) return reject(res.reason);
  if (res.width > claimed)
    return reject("decomposition width " + std::to_string(res.width) + " exceeds claimed " +
                  std::to_string(claimed));
  return {true, ""};
}

CertificateResult verify_bramble_cert(const nlohmann::json& cert, const Graph& g) {
  Bramble b;
  std::string err;
  if (!read_sets(cert, "elements", b.elements, err)) return reject(err);
  long long claimed;
  if (!read_int(cert, "claimed_order", claimed, err)) return reject(err);
  auto res = validate_bramble(g, b);
  if (!res.valid) return reject(res.reason);
  auto ord = bramble_order(g, b);
  if (ord.order < claimed)
    return reject("hitting set of size " + std::to_string(ord.order) +
                  " found, below claimed order " + std::to_string(claimed));
  return {true, ""};
}

CertificateResult verify_minor_model_cert(const nlohmann::json& cert, const Graph& g) {
  if (!cert.contains("h")) return reject("missing field 'h'");
  Graph h;
  try {
    h = graph_from_json(cert["h"]);
  } catch (const std::exception& e) {
    return reject(std::string("bad pattern graph: ") + e.what());
  }
  if (!cert.contains("branch_sets") || !cert["branch_sets"].is_object())
    return reject("missing or non-object field 'branch_sets'");
  MinorModel m;
  m.branch_sets.resize(h.n);
  for (const auto& [key, row] : cert["branch_sets"].items()) {
    int x;
    try {
      x = std::stoi(key);
    } catch (...) {
      return reject("branch set key '" + key + "' is not an integer");
    }
    if (x < 0 || x >= h.n) return reject("branch set key " + key + " out of range");
    if (!row.is_array()) return reject("branch set " + key + " is not an array");
    for (const auto& v : row) {
      if (!v.is_number_integer()) return reject("branch set " + key + " has a non-integer vertex");
      m.branch_sets[x].push_back(v.get<int>());
    }
  }
  auto res = validate_minor_model(g, h, m);
  if (!res.valid) return reject(res.reason);
  return {true, ""};
}

CertificateResult verify_cycle_packing_cert(const nlohmann::json& cert, const Graph& g) {
  std::vector<std::vector<int>> cycles;
  std::string err;
  if (!read_sets(cert, "cycles", cycles, err)) return reject(err);
  long long claimed;
  if (!read_int(cert, "claimed_count", claimed, err)) return reject(err);
  std::set<int> used;
  for (size_t i = 0; i < cycles.size(); ++i) {
    const auto& c = cycles[i];
    if (c.size() < 3) return reject("cycle " + std::to_string(i) + " has fewer than 3 vertices");
    std::set<int> own(c.begin(), c.end());
    if (own.size() != c.size())
      return reject("cycle " + std::to_string(i) + " repeats a vertex");
    for (int v : c) {
      if (v < 0 || v >= g.n) return reject("cycle " + std::to_string(i) + " vertex out of range");
      if (!used.insert(v).second)
        return reject("cycles not vertex-disjoint (vertex " + std::to_string(v) + " reused)");
    }
    for (size_t k = 0; k < c.size(); ++k)
      if (!g.has_edge(c[k], c[(k + 1) % c.size()]))
        return reject("cycle " + std::to_string(i) + " uses a non-edge");
  }
  if (static_cast<long long>(cycles.size()) < claimed)
    return reject("only " + std::to_string(cycles.size()) + " cycles given, claimed " +
                  std::to_string(claimed));
  return {true, ""};
}

}  // namespace

nlohmann::json tree_decomposition_certificate(const TreeDecomposition& td, int claimed_width) {
  nlohmann::json j;
  j["type"] = "tree_decomposition";
  j["bags"] = sets_to_json(td.bags);
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : td.tree_edges) edges.push_back({a, b});
  j["tree_edges"] = edges;
  j["claimed_width"] = claimed_width;
  return j;
}

nlohmann::json bramble_certificate(const Bramble& b, int claimed_order) {
  nlohmann::json j;
  j["type"] = "bramble";
  j["elements"] = sets_to_json(b.elements);
  j["claimed_order"] = claimed_order;
  return j;
}

nlohmann::json minor_model_certificate(const Graph& h, const MinorModel& m) {
  nlohmann::json j;
  j["type"] = "minor_model";
  j["h"] = graph_to_json(h);
  nlohmann::json bs = nlohmann::json::object();
  for (size_t x = 0; x < m.branch_sets.size(); ++x) bs[std::to_string(x)] = m.branch_sets[x];
  j["branch_sets"] = bs;
  return j;
}

nlohmann::json cycle_packing_certificate(const std::vector<std::vector<int>>& cycles,
                                         int claimed_count) {
  nlohmann::json j;
  j["type"] = "cycle_packing";
  j["cycles"] = sets_to_json(cycles);
  j["claimed_count"] = claimed_count;
  return j;
}

CertificateResult verify_certificate(const nlohmann::json& cert, const Graph& g) {
  if (!cert.is_object() || !cert.contains("type") || !cert["type"].is_string())
    throw std::invalid_argument("certificate has no type tag");
  std::string type = cert["type"].get<std::string>();
  if (type == "tree_decomposition") return verify_tree_decomposition_cert(cert, g);
  if (type == "bramble") return verify_bramble_cert(cert, g);
  if (type == "minor_model") return verify_minor_model_cert(cert, g);
  if (type == "cycle_packing") return verify_cycle_packing_cert(cert, g);
  throw std::invalid_argument("unknown certificate type '" + type + "'");
}

}  // namespace minorlab
