#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "critidx/digraph.hpp"

namespace critidx {

/// Parse failure carrying the 1-based input line it refers to.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads either graph format. Both open with `n <count>`; the body is then
/// either one `j: a b c` line per receiver (every receiver exactly once) or
/// `i -> j` edge lines, chosen by the first body line. Blank lines and text
/// after `#` are ignored.
Digraph parse_graph(std::istream& in);
Digraph parse_graph_string(const std::string& text);
Digraph parse_graph_file(const std::string& path);

/// Side-information format, which parse_graph reads back unchanged.
std::string format_side_info(const Digraph& g);
std::string format_edge_list(const Digraph& g);

}  // namespace critidx
