// Command-line front end: one verb per invocation, JSON on stdout unless
// --format text. Exit codes: 0 success, 1 bad input, 2 internal failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "critidx/bounds.hpp"
#include "critidx/census.hpp"
#include "critidx/circular.hpp"
#include "critidx/criticality.hpp"
#include "critidx/graph_io.hpp"
#include "critidx/report.hpp"

namespace {

using critidx::Digraph;
using nlohmann::json;

int default_workers() {
  if (const char* env = std::getenv("CRITIDX_WORKERS")) {
    int value = std::atoi(env);
    if (value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Digraph load_graph(const std::string& path) {
  if (path == "-") return critidx::parse_graph(std::cin);
  return critidx::parse_graph_file(path);
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + scalar_text(v[k]);
    return out + "]";
  }
  return v.dump();
}

bool is_table(const json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v) {
    if (!row.is_object() || row.size() != v[0].size()) return false;
    for (const auto& [key, cell] : row.items()) {
      if (!v[0].contains(key) || cell.is_object()) return false;
    }
  }
  return true;
}

void render_text(const json& v, std::ostream& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : v.items()) {
    if (is_table(value)) {
      out << pad << key << ":\n";
      std::vector<std::string> cols;
      for (const auto& [col, cell] : value[0].items()) cols.push_back(col);
      std::vector<std::size_t> width;
      for (const auto& col : cols) {
        std::size_t w = col.size();
        for (const auto& row : value) w = std::max(w, scalar_text(row[col]).size());
        width.push_back(w);
      }
      auto line = [&](auto cell_of) {
        out << pad << "  ";
        for (std::size_t c = 0; c < cols.size(); ++c) {
          std::string cell = cell_of(c);
          out << cell << std::string(width[c] - cell.size() + 2, ' ');
        }
        out << "\n";
      };
      line([&](std::size_t c) { return cols[c]; });
      for (const auto& row : value) line([&](std::size_t c) { return scalar_text(row[cols[c]]); });
    } else if (value.is_object()) {
      out << pad << key << ":\n";
      render_text(value, out, indent + 2);
    } else {
      out << pad << key << ": " << scalar_text(value) << "\n";
    }
  }
}

struct Output {
  bool text = false;
  void emit(const json& doc) const {
    if (text) {
      render_text(doc, std::cout);
    } else {
      std::cout << doc.dump(2) << "\n";
    }
  }
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("malformed integer list '" + text + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Criticality analysis for index coding side-information graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string graph_path;
  auto add_graph = [&](CLI::App* sub) { sub->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required(); };

  auto* analyze = app.add_subcommand("analyze", "Full report for one graph");
  add_graph(analyze);
  auto* classify = app.add_subcommand("classify", "Edge and graph criticality verdicts");
  add_graph(classify);
  auto* mais = app.add_subcommand("mais", "MAIS outer bound");
  add_graph(mais);

  std::string rate_text;
  auto* flcc = app.add_subcommand("flcc", "Clique-covering achievability of a rate tuple");
  add_graph(flcc);
  flcc->add_option("--rate", rate_text, "Comma-separated rates p/q,...")->required();

  bool check_class = false;
  bool prop7 = false;
  bool rho = false;
  auto* circular = app.add_subcommand("circular", "Circular-class analysis");
  add_graph(circular);
  circular->add_flag("--check-class", check_class, "Report class membership and chains");
  circular->add_flag("--verify-prop7", prop7, "Certify every MAIS vertex by the chain construction and by LP");
  circular->add_flag("--rho", rho, "Build clique weights for --rate");
  circular->add_option("--rate", rate_text, "Comma-separated rates p/q,...");

  std::string subset_text;
  int bits = 1;
  auto* codec = app.add_subcommand("codec", "XOR cycle code on an induced unicycle");
  add_graph(codec);
  codec->add_option("--subset", subset_text, "Comma-separated node set")->required();
  codec->add_option("--bits", bits, "Bits per message")->check(CLI::Range(1, 32));

  int nodes = 5;
  std::string out_path;
  std::string summary_path;
  int workers = default_workers();
  std::string include_vacuous = "true";
  auto* census = app.add_subcommand("census", "Census of all non-isomorphic instances");
  census->add_option("--nodes", nodes, "Node count (1..5)")->check(CLI::Range(1, 5));
  census->add_option("--out", out_path, "Per-instance JSON-lines file");
  census->add_option("--summary", summary_path, "Summary JSON file");
  census->add_option("--workers", workers, "Worker threads (default from CRITIDX_WORKERS)")->check(CLI::PositiveNumber);
  census->add_option("--include-vacuous", include_vacuous, "Count the edgeless graph")
      ->check(CLI::IsMember({"true", "false"}));

  int base = 0;
  int pi = 0;
  int pj = 0;
  int pk = 0;
  std::string blow_up;
  auto* gen = app.add_subcommand("gen-prop4", "Generate a hub-augmented cycle graph, optionally blown up");
  gen->add_option("--n", base, "Cycle length")->required();
  gen->add_option("--i", pi, "Hub out-neighbour i")->required();
  gen->add_option("--j", pj, "Hub in-neighbour j")->required();
  gen->add_option("--k", pk, "Hub out-neighbour k")->required();
  gen->add_option("--blow-up", blow_up, "Comma-separated clique size per node");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  const Output output{format == "text"};

  try {
    if (*analyze) {
      critidx::TightnessCache cache;
      output.emit(critidx::analysis_report(load_graph(graph_path), &cache));
    } else if (*classify) {
      output.emit(critidx::classify_json(load_graph(graph_path)));
    } else if (*mais) {
      output.emit(critidx::mais_json(load_graph(graph_path)));
    } else if (*flcc) {
      const Digraph g = load_graph(graph_path);
      output.emit(critidx::flcc_json(g, critidx::parse_rate_tuple(rate_text)));
    } else if (*circular) {
      const Digraph g = load_graph(graph_path);
      json doc = critidx::circular_class_json(g);
      if (prop7) doc["prop7"] = critidx::prop7_json(g);
      if (rho) {
        if (rate_text.empty()) throw std::invalid_argument("--rho needs --rate");
        doc["rho"] = critidx::circular_rho_json(g, critidx::parse_rate_tuple(rate_text));
      }
      output.emit(doc);
    } else if (*codec) {
      const Digraph g = load_graph(graph_path);
      output.emit(critidx::codec_json(g, critidx::NodeSet::from_vector(parse_int_list(subset_text)), bits));
    } else if (*census) {
      const auto report = critidx::run_census(nodes, {include_vacuous == "true"}, workers);
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << report.rows_jsonl();
      }
      const std::string summary = report.summary_json();
      if (!summary_path.empty()) {
        std::ofstream out(summary_path);
        if (!out) throw std::runtime_error("cannot write '" + summary_path + "'");
        out << summary << "\n";
      }
      output.emit(json::parse(summary));
    } else if (*gen) {
      Digraph g = critidx::generate_prop4_part1(base, pi, pj, pk);
      if (!blow_up.empty()) g = critidx::blow_up_cliques(g, parse_int_list(blow_up));
      if (output.text) {
        std::cout << critidx::format_side_info(g);
      } else {
        output.emit(critidx::graph_json(g));
      }
    }
  } catch (const critidx::ProofViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
