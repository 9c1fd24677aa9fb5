#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wgraph/colored_graph.hpp"

namespace wgraph {

/// Raised for malformed .cwg input; carries the 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// The .cwg format is two lines:
//   cwg <n>
//   <C(n,2) characters from {0,1,2}, row-major strict upper triangle>
// Several graphs in one file are separated by blank lines.

std::string to_cwg(const ColoredGraph& g);
void write_cwg(std::ostream& out, const ColoredGraph& g);

ColoredGraph parse_cwg(const std::string& text);
std::vector<ColoredGraph> parse_cwg_list(const std::string& text);

ColoredGraph read_cwg_file(const std::string& path);
std::vector<ColoredGraph> read_cwg_list_file(const std::string& path);
void write_cwg_file(const std::string& path, const ColoredGraph& g);

}  // namespace wgraph
