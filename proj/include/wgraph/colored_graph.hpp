#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wgraph {

/// Edge colour of a pair of distinct vertices. The numeric value is the weight.
enum class Color : std::uint8_t { Green = 0, Blue = 1, Red = 2 };

using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

inline constexpr VertexMask low_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline int popcount(VertexMask m) { return std::popcount(m); }

inline int lowest(VertexMask m) { return std::countr_zero(m); }

/// Number of unordered pairs of an n-vertex graph.
inline constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Position of the pair (x, y), x < y, in the row-major strict upper triangle.
inline constexpr int pair_index(int n, int x, int y) {
  return x * (2 * n - x - 1) / 2 + (y - x - 1);
}

/// A complete graph whose pairs carry weights in {0, 1, 2}.
///
/// Rows are kept as two bit planes per vertex: the set of red neighbours and
/// the set of blue neighbours. Both planes are symmetric and the diagonal is
/// never set, so the weight function is symmetric with zero diagonal by
/// construction.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  /// All-green graph on n vertices.
  explicit ColoredGraph(int n);

  /// Builds a graph from weights listed in row-major upper-triangle order.
  static ColoredGraph from_pairs(int n, const std::vector<int>& weights);

  /// Parses the upper-triangle string of '0'/'1'/'2' characters.
  static ColoredGraph from_code(int n, std::string_view code);

  int order() const { return n_; }
  bool empty() const { return n_ == 0; }
  VertexMask vertices() const { return low_mask(n_); }

  int weight(int x, int y) const {
    return static_cast<int>((blue_[x] >> y) & 1U) + 2 * static_cast<int>((red_[x] >> y) & 1U);
  }

  /// 2 - weight, the complementary weight used in degree counting arguments.
  int co_weight(int x, int y) const { return x == y ? 0 : 2 - weight(x, y); }

  Color color(int x, int y) const { return static_cast<Color>(weight(x, y)); }

  /// Bounds-checked weight lookup.
  int at(int x, int y) const;

  void set(int x, int y, int w);

  VertexMask red(int x) const { return red_[x]; }
  VertexMask blue(int x) const { return blue_[x]; }
  /// Vertices joined to x by a blue or red pair.
  VertexMask positive(int x) const { return red_[x] | blue_[x]; }
  /// Vertices joined to x by a green pair (excluding x).
  VertexMask green(int x) const { return vertices() & ~(positive(x) | bit(x)); }

  /// Row-major upper-triangle code string.
  std::string code() const;

  /// The graph with vertex `perm[i]` of *this placed at position i.
  ColoredGraph relabeled(const std::vector<int>& perm) const;

  /// Induced subgraph on the listed vertices, in the listed order.
  ColoredGraph induced(const std::vector<int>& vertices) const;

  /// Copy without vertex v; later vertices shift down by one.
  ColoredGraph without_vertex(int v) const;

  /// Copy with one extra vertex whose weights to 0..n-1 are given.
  ColoredGraph with_vertex(const std::vector<int>& weights) const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n_ == b.n_ && a.red_ == b.red_ && a.blue_ == b.blue_;
  }

 private:
  int n_ = 0;
  std::vector<VertexMask> red_;
  std::vector<VertexMask> blue_;
};

/// Sum of the weights at x.
int degree(const ColoredGraph& g, int x);

/// Minimum degree; throws std::invalid_argument on the empty graph.
int min_degree(const ColoredGraph& g);

/// Total weight over unordered pairs, e(G).
long edge_weight_sum(const ColoredGraph& g);

/// Number of pairs with each colour, indexed by weight.
struct ColorCounts {
  int green = 0;
  int blue = 0;
  int red = 0;
};
ColorCounts color_counts(const ColoredGraph& g);

}  // namespace wgraph
