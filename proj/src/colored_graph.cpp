#include "wgraph/colored_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace wgraph {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("graph order must lie in [0, 64], got " + std::to_string(n));
  }
}

}  // namespace

ColoredGraph::ColoredGraph(int n) : n_(n) {
  check_order(n);
  red_.assign(static_cast<std::size_t>(n), 0);
  blue_.assign(static_cast<std::size_t>(n), 0);
}

ColoredGraph ColoredGraph::from_pairs(int n, const std::vector<int>& weights) {
  ColoredGraph g(n);
  if (static_cast<int>(weights.size()) != pair_count(n)) {
    throw std::invalid_argument("expected " + std::to_string(pair_count(n)) + " pair weights, got " +
                                std::to_string(weights.size()));
  }
  std::size_t k = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) g.set(x, y, weights[k++]);
  }
  return g;
}

ColoredGraph ColoredGraph::from_code(int n, std::string_view code) {
  ColoredGraph g(n);
  if (static_cast<int>(code.size()) != pair_count(n)) {
    throw std::invalid_argument("expected " + std::to_string(pair_count(n)) + " code characters, got " +
                                std::to_string(code.size()));
  }
  std::size_t k = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const char c = code[k++];
      if (c < '0' || c > '2') throw std::invalid_argument(std::string("invalid weight character '") + c + "'");
      g.set(x, y, c - '0');
    }
  }
  return g;
}

int ColoredGraph::at(int x, int y) const {
  if (x < 0 || y < 0 || x >= n_ || y >= n_) throw std::out_of_range("vertex index out of range");
  return x == y ? 0 : weight(x, y);
}

void ColoredGraph::set(int x, int y, int w) {
  if (x < 0 || y < 0 || x >= n_ || y >= n_) throw std::out_of_range("vertex index out of range");
  if (x == y) {
    if (w != 0) throw std::invalid_argument("diagonal weights must be zero");
    return;
  }
  if (w < 0 || w > 2) throw std::invalid_argument("weights must lie in {0, 1, 2}");
  const VertexMask bx = bit(x);
  const VertexMask by = bit(y);
  red_[x] &= ~by;
  red_[y] &= ~bx;
  blue_[x] &= ~by;
  blue_[y] &= ~bx;
  if (w == 2) {
    red_[x] |= by;
    red_[y] |= bx;
  } else if (w == 1) {
    blue_[x] |= by;
    blue_[y] |= bx;
  }
}

std::string ColoredGraph::code() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(pair_count(n_)));
  for (int x = 0; x < n_; ++x) {
    for (int y = x + 1; y < n_; ++y) s.push_back(static_cast<char>('0' + weight(x, y)));
  }
  return s;
}

ColoredGraph ColoredGraph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation length mismatch");
  return induced(perm);
}

ColoredGraph ColoredGraph::induced(const std::vector<int>& vertices) const {
  const int m = static_cast<int>(vertices.size());
  ColoredGraph h(m);
  VertexMask seen = 0;
  for (int v : vertices) {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    if (seen & bit(v)) throw std::invalid_argument("repeated vertex in selection");
    seen |= bit(v);
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) h.set(i, j, weight(vertices[i], vertices[j]));
  }
  return h;
}

ColoredGraph ColoredGraph::without_vertex(int v) const {
  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) {
    if (x != v) keep.push_back(x);
  }
  return induced(keep);
}

ColoredGraph ColoredGraph::with_vertex(const std::vector<int>& weights) const {
  if (static_cast<int>(weights.size()) != n_) throw std::invalid_argument("weight vector length mismatch");
  ColoredGraph h(n_ + 1);
  h.red_.assign(red_.begin(), red_.end());
  h.blue_.assign(blue_.begin(), blue_.end());
  h.red_.push_back(0);
  h.blue_.push_back(0);
  for (int x = 0; x < n_; ++x) h.set(x, n_, weights[static_cast<std::size_t>(x)]);
  return h;
}

int degree(const ColoredGraph& g, int x) {
  if (x < 0 || x >= g.order()) throw std::out_of_range("vertex index out of range");
  return popcount(g.blue(x)) + 2 * popcount(g.red(x));
}

int min_degree(const ColoredGraph& g) {
  if (g.empty()) throw std::invalid_argument("minimum degree of the empty graph is undefined");
  int best = degree(g, 0);
  for (int x = 1; x < g.order(); ++x) best = std::min(best, degree(g, x));
  return best;
}

long edge_weight_sum(const ColoredGraph& g) {
  long total = 0;
  for (int x = 0; x < g.order(); ++x) total += degree(g, x);
  return total / 2;
}

ColorCounts color_counts(const ColoredGraph& g) {
  ColorCounts c;
  for (int x = 0; x < g.order(); ++x) {
    c.blue += popcount(g.blue(x));
    c.red += popcount(g.red(x));
  }
  c.blue /= 2;
  c.red /= 2;
  c.green = pair_count(g.order()) - c.blue - c.red;
  return c;
}

}  // namespace wgraph
