#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "critidx/canonical.hpp"
#include "critidx/criticality.hpp"

namespace critidx {

/// Per-instance facts gathered by the census.
struct CensusRow {
  CanonicalCode code;
  int edges = 0;
  bool vacuous = false;
  bool strongly_connected = false;
  /// Every edge lies on a directed cycle.
  bool all_edges_on_cycles = false;
  /// A_i not inside A_j for every edge i->j.
  bool nondegraded = false;
  bool all_edges_unicycle = false;
  GraphStatus graph_status = GraphStatus::Critical;
  int critical_edges = 0;
  int noncritical_edges = 0;
  int indeterminate_edges = 0;

  /// Every edge passes both necessary conditions (cycle, nondegraded).
  bool necessary_pass() const { return all_edges_on_cycles && nondegraded; }
  std::string to_json() const;
};

CensusRow census_row(const Digraph& g, TightnessCache* cache = nullptr);

struct CensusConventions {
  /// Count the edgeless graph, which is critical only vacuously.
  bool include_vacuous = true;
};

/// One counting rule applied across the census, with its result.
struct ConventionCount {
  std::string quantity;  // "all_edges_unicycle" or "necessary_pass"
  bool include_vacuous = true;
  /// Graph-level cycle condition: require strong connectivity instead of
  /// every edge lying on a cycle.
  bool require_strong_connectivity = false;
  /// Also drop graphs with an edge eliminated by MAIS tightness of G_e.
  bool tightness_elimination = false;
  std::int64_t count = 0;
};

struct CensusReport {
  int n = 0;
  std::int64_t total = 0;
  std::int64_t all_edges_unicycle = 0;
  std::int64_t necessary_pass = 0;
  std::int64_t residual_indeterminate = 0;
  CensusConventions conventions;
  /// Every counting rule in the exploration grid.
  std::vector<ConventionCount> explorations;
  std::vector<CensusRow> rows;

  std::string summary_json() const;
  /// One CensusRow per line, in enumeration order.
  std::string rows_jsonl() const;
};

/// Census of all non-isomorphic n-node instances (n <= 5). The report does
/// not depend on `workers`.
CensusReport run_census(int n, CensusConventions conventions, int workers = 1);

}  // namespace critidx
