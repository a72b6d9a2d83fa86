#include "critidx/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

namespace critidx {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_label(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

enum class Format { Unknown, SideInfo, EdgeList };

}  // namespace

Digraph parse_graph(std::istream& in) {
  std::optional<int> n;
  Format format = Format::Unknown;
  std::vector<Edge> edges;
  std::vector<int> receiver_line;
  std::vector<std::vector<bool>> seen;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text(raw);
    if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;

    if (!n) {
      auto tokens = split_ws(text);
      if (tokens.size() != 2 || tokens[0] != "n") throw ParseError(line, "expected header 'n <count>'");
      int count = parse_label(tokens[1], line);
      if (count < 0 || count > kMaxNodes) throw ParseError(line, "node count out of range");
      n = count;
      receiver_line.assign(static_cast<std::size_t>(count) + 1, 0);
      seen.assign(static_cast<std::size_t>(count) + 1, std::vector<bool>(static_cast<std::size_t>(count) + 1, false));
      continue;
    }

    auto add_edge = [&](int from, int to) {
      if (from < 1 || from > *n || to < 1 || to > *n) {
        throw ParseError(line, "node label outside [1.." + std::to_string(*n) + "]");
      }
      if (from == to) throw ParseError(line, "self-loop at node " + std::to_string(from));
      if (seen[from][to]) throw ParseError(line, "duplicate edge " + Edge{from, to}.str());
      seen[from][to] = true;
      edges.push_back({from, to});
    };

    Format here = text.find("->") != std::string_view::npos ? Format::EdgeList
                  : text.find(':') != std::string_view::npos ? Format::SideInfo
                                                               : Format::Unknown;
    if (here == Format::Unknown) throw ParseError(line, "expected 'j: ...' or 'i -> j'");
    if (format != Format::Unknown && here != format) throw ParseError(line, "mixed side-information and edge-list lines");
    format = here;

    if (format == Format::EdgeList) {
      auto arrow = text.find("->");
      auto lhs = split_ws(text.substr(0, arrow));
      auto rhs = split_ws(text.substr(arrow + 2));
      if (lhs.size() != 1 || rhs.size() != 1) throw ParseError(line, "expected 'i -> j'");
      add_edge(parse_label(lhs[0], line), parse_label(rhs[0], line));
    } else {
      auto colon = text.find(':');
      auto head = split_ws(text.substr(0, colon));
      if (head.size() != 1) throw ParseError(line, "expected 'j: a b c'");
      int j = parse_label(head[0], line);
      if (j < 1 || j > *n) throw ParseError(line, "receiver outside [1.." + std::to_string(*n) + "]");
      if (receiver_line[j] != 0) {
        throw ParseError(line, "receiver " + std::to_string(j) + " already listed on line " + std::to_string(receiver_line[j]));
      }
      receiver_line[j] = line;
      for (auto token : split_ws(text.substr(colon + 1))) add_edge(parse_label(token, line), j);
    }
  }

  if (!n) throw ParseError(line, "missing header 'n <count>'");
  if (format == Format::SideInfo) {
    for (int j = 1; j <= *n; ++j) {
      if (receiver_line[j] == 0) throw ParseError(line, "receiver " + std::to_string(j) + " has no side-information line");
    }
  }
  return Digraph::from_edges(*n, edges);
}

Digraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Digraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_graph(in);
}

std::string format_side_info(const Digraph& g) {
  std::ostringstream out;
  out << "n " << g.n() << "\n";
  for (int j = 1; j <= g.n(); ++j) {
    out << j << ":";
    for (int i : g.side_info(j).members()) out << " " << i;
    out << "\n";
  }
  return out.str();
}

std::string format_edge_list(const Digraph& g) {
  std::ostringstream out;
  out << "n " << g.n() << "\n";
  for (const Edge& e : g.edges()) out << e.from << " -> " << e.to << "\n";
  return out.str();
}

}  // namespace critidx
