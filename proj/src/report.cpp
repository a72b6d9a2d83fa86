#include "critidx/report.hpp"

#include <set>

#include "critidx/bounds.hpp"

namespace critidx {

namespace {

nlohmann::json rates_json(const RateTuple& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& x : r) out.push_back(x.str());
  return out;
}

nlohmann::json edge_list_json(const std::vector<Edge>& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (const Edge& e : edges) out.push_back({e.from, e.to});
  return out;
}

}  // namespace

nlohmann::json graph_json(const Digraph& g) {
  nlohmann::json side = nlohmann::json::array();
  for (int j = 1; j <= g.n(); ++j) side.push_back(g.side_info(j).members());
  return {{"n", g.n()}, {"side_info", side}, {"edges", edge_list_json(g.edges())}};
}

nlohmann::json rho_json(const RhoAssignment& rho) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [clique, weight] : rho) out.push_back({{"clique", clique.members()}, {"weight", weight.str()}});
  return out;
}

nlohmann::json mais_json(const Digraph& g) {
  const MaisBound bound = mais_region(g);
  nlohmann::json out = nlohmann::json::parse(bound.region.to_json());
  out["mais_number"] = bound.mais_number;
  return out;
}

nlohmann::json flcc_json(const Digraph& g, const RateTuple& r) {
  const FlccResult result = flcc_achievable(g, r);
  nlohmann::json out = {{"rate", rates_json(r)}, {"achievable", result.achievable}};
  if (result.witness) out["rho"] = rho_json(*result.witness);
  return out;
}

nlohmann::json classify_json(const Digraph& g, TightnessCache* cache) {
  const GraphVerdict verdict = classify_graph(g, cache);
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [e, v] : verdict.per_edge) {
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"status", to_string(v.status)},
                     {"reason", to_string(v.reason)},
                     {"witness", v.witness ? nlohmann::json(v.witness->members()) : nlohmann::json(nullptr)}});
  }
  return {{"edges", edges}, {"graph_status", to_string(verdict.graph_status)}, {"vacuous", verdict.vacuous}};
}

nlohmann::json codec_json(const Digraph& g, NodeSet s, int bits) {
  const IndexCode code = build_cycle_code(g, s, bits);
  const bool exhaustive = code.total_message_bits() <= kMaxExhaustiveBits;
  const bool verified = exhaustive ? verify_code(code, g) : verify_code_sampled(code, g, 10000, 0x5eed);
  return {{"subset", s.members()},
          {"bits", bits},
          {"index_bits", code.index_bits},
          {"transmissions", code.transmissions},
          {"rates", rates_json(achieved_rates(code))},
          {"verification", exhaustive ? "exhaustive" : "sampled"},
          {"verified", verified}};
}

nlohmann::json circular_class_json(const Digraph& g) {
  nlohmann::json out = {{"in_class", is_circular_class(g)}};
  if (!out["in_class"]) return out;
  // At n = 3 every graph is in the class.
  out["vacuous_at_n3"] = g.n() == 3;
  out["proper_subset_condition"] = satisfies_proper_subset_condition(g);
  try {
    nlohmann::json list = nlohmann::json::array();
    for (const Chain& c : chains(g)) list.push_back({{"start", c.start}, {"length", c.length}, {"nodes", c.nodes()}});
    out["chains"] = list;
  } catch (const std::invalid_argument&) {
    out["chains"] = nullptr;
    out["bidirectional_ring"] = true;
  }
  out["critical_edges"] = edge_list_json(critical_edges_circular(g));
  return out;
}

nlohmann::json prop7_json(const Digraph& g) {
  const Prop7Report report = verify_prop7(g);
  nlohmann::json out = {{"holds", report.holds}, {"vertices", report.vertices}};
  if (report.construction_failure) out["construction_failure"] = rates_json(*report.construction_failure);
  if (report.lp_failure) out["lp_failure"] = rates_json(*report.lp_failure);
  return out;
}

nlohmann::json circular_rho_json(const Digraph& g, const RateTuple& r) {
  const ConstructedRho built = build_rho(g, r);
  if (!built.certified) {
    throw ProofViolation("chain construction fails to certify " + format_rate_tuple(r));
  }
  return {{"rate", rates_json(r)}, {"case", built.proof_case}, {"certified", true}, {"rho", rho_json(built.rho)}};
}

nlohmann::json analysis_report(const Digraph& g, TightnessCache* cache) {
  nlohmann::json out;
  out["graph"] = graph_json(g);
  out["mais"] = mais_json(g);
  const SymmetricBounds sym = symmetric_bounds(g);
  out["symmetric_bounds"] = {{"lower", sym.lower.str()}, {"upper", sym.upper.str()}};
  nlohmann::json ks = nlohmann::json::array();
  for (NodeSet k : cliques(g)) ks.push_back(k.members());
  out["cliques"] = ks;
  out["classification"] = classify_json(g, cache);

  std::set<NodeSet> witnesses;
  for (const auto& e : out["classification"]["edges"]) {
    if (e["status"] == "Critical") witnesses.insert(NodeSet::from_vector(e["witness"].get<std::vector<int>>()));
  }
  nlohmann::json certificates = nlohmann::json::array();
  for (NodeSet s : witnesses) {
    nlohmann::json cert = codec_json(g, s, 1);
    if (!cert["verified"].get<bool>()) throw ProofViolation("cycle code on " + s.str() + " fails to decode");
    certificates.push_back(std::move(cert));
  }
  out["codec_certificates"] = certificates;

  if (is_circular_class(g)) {
    nlohmann::json circ = circular_class_json(g);
    if (circ["proper_subset_condition"].get<bool>()) circ["prop7"] = prop7_json(g);
    out["circular_class"] = circ;
  }
  return out;
}

}  // namespace critidx
