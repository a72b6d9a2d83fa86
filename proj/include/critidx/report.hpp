#pragma once

#include "critidx/circular.hpp"
#include "critidx/criticality.hpp"
#include "critidx/cycle_codec.hpp"
#include "critidx/digraph.hpp"
#include "json.hpp"

namespace critidx {

// JSON documents behind the command-line verbs. Rationals are always
// emitted as "p/q" strings and node lists are 1-based.

nlohmann::json graph_json(const Digraph& g);
nlohmann::json rho_json(const RhoAssignment& rho);

/// {"n", "constraints", "mais_number"}
nlohmann::json mais_json(const Digraph& g);
/// {"rate", "achievable", "rho"?}
nlohmann::json flcc_json(const Digraph& g, const RateTuple& r);
/// {"edges": [{"from","to","status","reason","witness"}], "graph_status", "vacuous"}
nlohmann::json classify_json(const Digraph& g, TightnessCache* cache = nullptr);
/// {"subset", "bits", "index_bits", "transmissions", "rates", "verified"}
nlohmann::json codec_json(const Digraph& g, NodeSet s, int bits);
/// Class membership, proper-subset condition and chains.
nlohmann::json circular_class_json(const Digraph& g);
nlohmann::json prop7_json(const Digraph& g);
nlohmann::json circular_rho_json(const Digraph& g, const RateTuple& r);

/// Everything at once: graph, MAIS region, symmetric bounds, cliques, edge
/// verdicts, the circular-class section when it applies, and a verified
/// cycle-code certificate for every unicycle witness. Throws ProofViolation
/// if a certificate fails to verify.
nlohmann::json analysis_report(const Digraph& g, TightnessCache* cache = nullptr);

}  // namespace critidx
