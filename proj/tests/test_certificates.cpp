#include <doctest.h>

#include "minorlab/bramble.hpp"
#include "minorlab/certificates.hpp"
#include "minorlab/constructions.hpp"
#include "minorlab/decomposition.hpp"
#include "minorlab/graph.hpp"
#include "minorlab/io.hpp"
#include "minorlab/minor.hpp"

using namespace minorlab;

TEST_CASE("tree decomposition certificate round trip") {
  Graph g = make_grid(3, 3);
  auto r = exact_treewidth(g);
  auto cert = tree_decomposition_certificate(r.decomposition, r.width);
  CHECK(cert["type"] == "tree_decomposition");
  auto res = verify_certificate(cert, g);
  CHECK(res.accepted);

  // claiming a smaller width than achieved must be rejected
  auto lying = tree_decomposition_certificate(r.decomposition, r.width - 1);
  CHECK_FALSE(verify_certificate(lying, g).accepted);
}

TEST_CASE("bramble certificate round trip") {
  Graph g = make_grid(3, 3);
  Bramble b = grid_cross_bramble(3);
  auto cert = bramble_certificate(b, 4);
  CHECK(verify_certificate(cert, g).accepted);

  // overclaimed order: the checker finds the smaller hitting set
  auto over = bramble_certificate(b, 5);
  auto res = verify_certificate(over, g);
  CHECK_FALSE(res.accepted);
  CHECK(res.reason.find("hitting set of size 4 found") != std::string::npos);

  // claimed order below the true order is still a valid lower bound
  CHECK(verify_certificate(bramble_certificate(b, 3), g).accepted);

  Bramble bad;
  bad.elements = {{0}, {8}};  // opposite grid corners, no touching
  CHECK_FALSE(verify_certificate(bramble_certificate(bad, 1), g).accepted);
}

TEST_CASE("minor model certificate round trip") {
  Graph g = make_grid(4, 4);
  Graph prism = make_twisted_prism({4, identity_permutation(4)});
  MinorModel m = grid_prism_model(1);
  auto cert = minor_model_certificate(prism, m);

  // branch sets keyed by stringified pattern vertex
  CHECK(cert["branch_sets"].is_object());
  CHECK(cert["branch_sets"].contains("0"));
  CHECK(verify_certificate(cert, g).accepted);

  // tamper: move a vertex into another branch set
  auto bad = cert;
  bad["branch_sets"]["1"].push_back(bad["branch_sets"]["0"][0]);
  auto res = verify_certificate(bad, g);
  CHECK_FALSE(res.accepted);
  CHECK(res.reason.find("disjoint") != std::string::npos);

  // malformed payloads are rejected, not thrown
  auto arr = cert;
  arr["branch_sets"] = nlohmann::json::array();
  CHECK_FALSE(verify_certificate(arr, g).accepted);
  auto badkey = cert;
  badkey["branch_sets"]["x"] = {0};
  CHECK_FALSE(verify_certificate(badkey, g).accepted);
}

TEST_CASE("cycle packing certificate round trip") {
  Graph g = disjoint_union(make_cycle(3), make_cycle(4));
  auto pack = cycle_packing_exact(g);
  auto cert = cycle_packing_certificate(pack.cycles, pack.count);
  CHECK(verify_certificate(cert, g).accepted);

  auto over = cycle_packing_certificate(pack.cycles, pack.count + 1);
  CHECK_FALSE(verify_certificate(over, g).accepted);

  auto broken = cycle_packing_certificate({{0, 1, 3}}, 1);  // 1-3 not an edge
  CHECK_FALSE(verify_certificate(broken, g).accepted);
}

TEST_CASE("unknown certificate type is a schema error") {
  nlohmann::json j;
  j["type"] = "who-knows";
  CHECK_THROWS_AS(verify_certificate(j, make_cycle(3)), std::invalid_argument);
}
