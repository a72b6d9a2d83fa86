#include "critidx/census.hpp"

#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace critidx {

namespace {

constexpr std::int64_t kPublishedTotal5 = 9608;
constexpr std::int64_t kPublishedUnicycle5 = 115;
constexpr std::int64_t kPublishedNecessary5 = 411;

bool passes_cycle_rule(const CensusRow& row, bool strong) {
  return strong ? row.strongly_connected : row.all_edges_on_cycles;
}

}  // namespace

std::string CensusRow::to_json() const {
  nlohmann::json j = {
      {"code", code.str()},
      {"edges", edges},
      {"vacuous", vacuous},
      {"strongly_connected", strongly_connected},
      {"all_edges_on_cycles", all_edges_on_cycles},
      {"nondegraded", nondegraded},
      {"necessary_pass", necessary_pass()},
      {"all_edges_unicycle", all_edges_unicycle},
      {"graph_status", to_string(graph_status)},
      {"critical_edges", critical_edges},
      {"noncritical_edges", noncritical_edges},
      {"indeterminate_edges", indeterminate_edges},
  };
  return j.dump();
}

CensusRow census_row(const Digraph& g, TightnessCache* cache) {
  CensusRow row;
  row.code = canonical_code(g);
  row.edges = g.edge_count();
  row.vacuous = row.edges == 0;
  row.strongly_connected = is_strongly_connected(g);
  row.all_edges_on_cycles = true;
  row.nondegraded = true;
  row.all_edges_unicycle = true;
  for (const Edge& e : g.edges()) {
    row.all_edges_on_cycles &= lies_on_directed_cycle(g, e);
    row.nondegraded &= is_nondegraded_edge(g, e);
  }
  const GraphVerdict verdict = classify_graph(g, cache);
  row.graph_status = verdict.graph_status;
  for (const auto& [e, v] : verdict.per_edge) {
    switch (v.status) {
      case EdgeStatus::Critical: ++row.critical_edges; break;
      case EdgeStatus::NonCritical: ++row.noncritical_edges; break;
      case EdgeStatus::Indeterminate: ++row.indeterminate_edges; break;
    }
    // Steps 1-2 run before the unicycle search, so a unicycle edge that
    // fails them would show up as NonCritical here; count it directly.
    if (v.reason != VerdictReason::UnicycleWitness && find_unicycle_containing(g, e)) {
      throw std::logic_error("unicycle edge " + e.str() + " failed a necessary condition");
    }
    row.all_edges_unicycle &= v.reason == VerdictReason::UnicycleWitness;
  }
  return row;
}

std::string CensusReport::summary_json() const {
  nlohmann::json grid = nlohmann::json::array();
  for (const ConventionCount& c : explorations) {
    nlohmann::json entry = {
        {"quantity", c.quantity},
        {"include_vacuous", c.include_vacuous},
        {"require_strong_connectivity", c.require_strong_connectivity},
        {"tightness_elimination", c.tightness_elimination},
        {"count", c.count},
    };
    if (n == 5) {
      const std::int64_t target = c.quantity == "all_edges_unicycle" ? kPublishedUnicycle5 : kPublishedNecessary5;
      entry["matches_published"] = c.count == target;
    }
    grid.push_back(std::move(entry));
  }
  nlohmann::json j = {
      {"n", n},
      {"total", total},
      {"all_edges_unicycle", all_edges_unicycle},
      {"necessary_pass", necessary_pass},
      {"residual_indeterminate", residual_indeterminate},
      {"conventions", {{"include_vacuous", conventions.include_vacuous}}},
      {"explorations", std::move(grid)},
  };
  if (n == 5) j["published_total_matches"] = total == kPublishedTotal5;
  return j.dump(2);
}

std::string CensusReport::rows_jsonl() const {
  std::string out;
  for (const CensusRow& row : rows) {
    out += row.to_json();
    out += '\n';
  }
  return out;
}

CensusReport run_census(int n, CensusConventions conventions, int workers) {
  if (n < 1 || n > kMaxEnumerationNodes) throw std::invalid_argument("census supports 1 <= n <= 5");
  workers = std::max(1, workers);
  const std::vector<Digraph> graphs = enumerate_nonisomorphic(n, workers);

  TightnessCache cache;
  std::vector<CensusRow> rows(graphs.size());
  auto work = [&](int w) {
    for (std::size_t k = static_cast<std::size_t>(w); k < graphs.size(); k += static_cast<std::size_t>(workers)) {
      rows[k] = census_row(graphs[k], &cache);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }

  CensusReport report;
  report.n = n;
  report.conventions = conventions;
  report.total = static_cast<std::int64_t>(rows.size());
  for (const CensusRow& row : rows) {
    if (row.vacuous && !conventions.include_vacuous) continue;
    report.all_edges_unicycle += row.all_edges_unicycle;
    report.necessary_pass += row.necessary_pass();
    report.residual_indeterminate += row.indeterminate_edges > 0;
  }
  if (report.all_edges_unicycle > report.necessary_pass) {
    throw std::logic_error("census: unicycle-covered instances exceed necessary-condition passes");
  }

  for (bool vacuous : {true, false}) {
    for (bool strong : {false, true}) {
      ConventionCount unicycle{"all_edges_unicycle", vacuous, strong, false, 0};
      for (const CensusRow& row : rows) {
        if (row.vacuous && !vacuous) continue;
        unicycle.count += row.all_edges_unicycle && (!strong || row.strongly_connected);
      }
      report.explorations.push_back(unicycle);
      for (bool tightness : {false, true}) {
        ConventionCount necessary{"necessary_pass", vacuous, strong, tightness, 0};
        for (const CensusRow& row : rows) {
          if (row.vacuous && !vacuous) continue;
          bool pass = passes_cycle_rule(row, strong) && row.nondegraded;
          if (tightness) pass = pass && row.graph_status != GraphStatus::NotCritical;
          necessary.count += pass;
        }
        report.explorations.push_back(necessary);
      }
    }
  }
  report.rows = std::move(rows);
  return report;
}

}  // namespace critidx
