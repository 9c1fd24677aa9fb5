#include "wgraph/cwg_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace wgraph {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::string to_cwg(const ColoredGraph& g) { return "cwg " + std::to_string(g.order()) + "\n" + g.code() + "\n"; }

void write_cwg(std::ostream& out, const ColoredGraph& g) { out << to_cwg(g); }

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

int parse_header(const std::string& line, int lineno) {
  if (line.rfind("cwg ", 0) != 0) throw ParseError(lineno, 1, "expected header 'cwg <n>'");
  const char* first = line.data() + 4;
  const char* last = line.data() + line.size();
  int n = -1;
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr == first) throw ParseError(lineno, 5, "expected vertex count");
  if (ptr != last) throw ParseError(lineno, static_cast<int>(ptr - line.data()) + 1, "trailing characters after vertex count");
  if (n < 0 || n > kMaxVertices) throw ParseError(lineno, 5, "vertex count must lie in [0, 64]");
  return n;
}

ColoredGraph parse_body(int n, const std::string& line, int lineno) {
  const int expected = pair_count(n);
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] < '0' || line[i] > '2') {
      throw ParseError(lineno, static_cast<int>(i) + 1, std::string("invalid weight character '") + line[i] + "'");
    }
  }
  if (static_cast<int>(line.size()) != expected) {
    throw ParseError(lineno, std::min(static_cast<int>(line.size()), expected) + 1,
                     "expected " + std::to_string(expected) + " weight characters, got " + std::to_string(line.size()));
  }
  return ColoredGraph::from_code(n, line);
}

// Parses graphs starting at lines[pos]; advances pos past the graph.
ColoredGraph parse_one(const std::vector<std::string>& lines, std::size_t& pos) {
  const int lineno = static_cast<int>(pos) + 1;
  const int n = parse_header(lines[pos], lineno);
  ++pos;
  if (pos >= lines.size()) {
    if (pair_count(n) == 0) return ColoredGraph(n);
    throw ParseError(lineno + 1, 1, "missing weight line");
  }
  if (pair_count(n) == 0 && !lines[pos].empty()) return ColoredGraph(n);
  ColoredGraph g = parse_body(n, lines[pos], lineno + 1);
  ++pos;
  return g;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

ColoredGraph parse_cwg(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty input");
  std::size_t pos = 0;
  ColoredGraph g = parse_one(lines, pos);
  for (; pos < lines.size(); ++pos) {
    if (!lines[pos].empty()) throw ParseError(static_cast<int>(pos) + 1, 1, "unexpected content after graph");
  }
  return g;
}

std::vector<ColoredGraph> parse_cwg_list(const std::string& text) {
  const auto lines = split_lines(text);
  std::vector<ColoredGraph> out;
  std::size_t pos = 0;
  while (pos < lines.size()) {
    if (lines[pos].empty()) {
      ++pos;
      continue;
    }
    out.push_back(parse_one(lines, pos));
  }
  return out;
}

ColoredGraph read_cwg_file(const std::string& path) { return parse_cwg(slurp(path)); }

std::vector<ColoredGraph> read_cwg_list_file(const std::string& path) { return parse_cwg_list(slurp(path)); }

void write_cwg_file(const std::string& path, const ColoredGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_cwg(out, g);
}

}  // namespace wgraph
