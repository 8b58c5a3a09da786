#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "minorlab/bramble.hpp"
#include "minorlab/decomposition.hpp"
#include "minorlab/graph.hpp"
#include "minorlab/minor.hpp"

namespace minorlab {

// Certificates are JSON objects with a "type" tag:
//   {"type":"tree_decomposition","bags":[[...]],"tree_edges":[[i,j],...],"claimed_width":w}
//   {"type":"bramble","elements":[[...]],"claimed_order":k}
//   {"type":"minor_model","h":<graph>,"branch_sets":{"0":[...], ...}}
//   {"type":"cycle_packing","cycles":[[...]],"claimed_count":c}

nlohmann::json tree_decomposition_certificate(const TreeDecomposition& td, int claimed_width);
nlohmann::json bramble_certificate(const Bramble& b, int claimed_order);
nlohmann::json minor_model_certificate(const Graph& h, const MinorModel& m);
nlohmann::json cycle_packing_certificate(const std::vector<std::vector<int>>& cycles,
                                         int claimed_count);

struct CertificateResult {
  bool accepted = false;
  std::string reason;  // set when rejected
};

// Total verification against the host graph: every certificate is either
// accepted or rejected with a reason.  Malformed payloads are rejected, not
// thrown; an unknown "type" raises std::invalid_argument (schema mismatch).
CertificateResult verify_certificate(const nlohmann::json& cert, const Graph& g);

}  // namespace minorlab
