#include "wgraph/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace wgraph {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Lays out parts consecutively and returns them.
std::vector<Part> layout(const std::vector<std::pair<std::string, int>>& blocks) {
  std::vector<Part> parts;
  int next = 0;
  for (const auto& [name, size] : blocks) {
    parts.push_back({name, next, size});
    next += size;
  }
  return parts;
}

int total_size(const std::vector<Part>& parts) { return parts.empty() ? 0 : parts.back().end(); }

void fill_between(ColoredGraph& g, const Part& a, const Part& b, int w) {
  for (int x = a.first; x < a.end(); ++x) {
    for (int y = b.first; y < b.end(); ++y) {
      if (x != y) g.set(x, y, w);
    }
  }
}

ColoredGraph clique(int n, int w) {
  require(n >= 0, "clique order must be nonnegative");
  ColoredGraph g(n);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) g.set(x, y, w);
  }
  return g;
}

}  // namespace

const Part& PartitionedConstruction::part(const std::string& name) const {
  for (const auto& p : parts) {
    if (p.name == name) return p;
  }
  throw std::out_of_range("no part named '" + name + "'");
}

ColoredGraph gen_rk(int n) { return clique(n, 2); }

ColoredGraph gen_bk(int n) { return clique(n, 1); }

ColoredGraph gen_rk_minus(int n) {
  require(n >= 2, "RK_n^- needs n >= 2");
  ColoredGraph g = clique(n, 2);
  g.set(0, 1, 1);
  return g;
}

ColoredGraph gen_gab(int a_plus_b, int b) {
  const int a = a_plus_b - b;
  require(b >= 1 && a >= b, "G_{a+b,b} needs a >= b >= 1 (got a+b = " + std::to_string(a_plus_b) +
                                ", b = " + std::to_string(b) + ")");
  ColoredGraph g = clique(a, 1);
  for (int x = 0; x < b; ++x) {
    for (int y = x + 1; y < b; ++y) g.set(x, y, 2);
  }
  return g;
}

std::vector<ColoredGraph> gen_family(int t) {
  require(t >= 2, "the family F_t needs t >= 2");
  std::vector<ColoredGraph> family;
  for (int i = 1; 2 * i <= t; ++i) family.push_back(gen_gab(t, i));
  return family;
}

PartitionedConstruction gen_hk(int q, int b, int k) {
  require(q > b && b >= 1, "H_k needs q > b >= 1");
  require(k >= 0 && k <= b - 1, "H_k needs 0 <= k <= b - 1");
  const int p = std::max(0, k + q + 1 - 2 * b);
  const int c = q - k - p;
  require(c > 0, "H_k part C must be nonempty");
  auto parts = layout({{"A", k}, {"B", p}, {"C", c}});
  ColoredGraph g = clique(q, 1);
  fill_between(g, parts[0], parts[0], 2);
  fill_between(g, parts[0], parts[2], 2);
  return {std::move(g), std::move(parts)};
}

PartitionedConstruction gen_j(int r) {
  require(r >= 3, "J needs r >= 3");
  auto parts = layout({{"A", r - 3}, {"b'", 1}, {"b''", 1}, {"c'", 1}, {"c''", 1}});
  ColoredGraph g = clique(r + 1, 2);
  const int b1 = parts[1].first;
  const int b2 = parts[2].first;
  const int c1 = parts[3].first;
  const int c2 = parts[4].first;
  g.set(c1, c2, 0);
  g.set(b1, c1, 1);
  g.set(b2, c2, 1);
  return {std::move(g), std::move(parts)};
}

PartitionedConstruction gen_odd_extremal(int r, int scale) {
  require(r >= 2, "odd extremal construction needs r >= 2");
  require(scale >= 1, "scale must be positive");
  std::vector<std::pair<std::string, int>> blocks;
  for (int i = 1; i <= 5; ++i) blocks.emplace_back("A" + std::to_string(i), scale);
  for (int j = 1; j <= r - 2; ++j) blocks.emplace_back("B" + std::to_string(j), 3 * scale);
  auto parts = layout(blocks);
  ColoredGraph g(total_size(parts));
  for (int i = 0; i < 5; ++i) fill_between(g, parts[i], parts[(i + 1) % 5], 2);
  for (std::size_t j = 5; j < parts.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) fill_between(g, parts[i], parts[j], 2);
  }
  return {std::move(g), std::move(parts)};
}

PartitionedConstruction gen_even_extremal(int r, int scale) {
  require(r >= 3, "even extremal construction needs r >= 3");
  require(scale >= 1, "scale must be positive");
  std::vector<std::pair<std::string, int>> blocks;
  for (int i = 1; i <= r - 3; ++i) blocks.emplace_back("A" + std::to_string(i), 7 * scale);
  blocks.emplace_back("B'", 6 * scale);
  blocks.emplace_back("B''", 6 * scale);
  blocks.emplace_back("C'", 2 * scale);
  blocks.emplace_back("C''", 2 * scale);
  auto parts = layout(blocks);
  ColoredGraph g(total_size(parts));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) fill_between(g, parts[i], parts[j], 2);
  }
  const std::size_t a = parts.size() - 4;
  const Part& b1 = parts[a];
  const Part& b2 = parts[a + 1];
  const Part& c1 = parts[a + 2];
  const Part& c2 = parts[a + 3];
  fill_between(g, c1, c2, 0);
  fill_between(g, b1, c1, 1);
  fill_between(g, b2, c2, 1);
  return {std::move(g), std::move(parts)};
}

PartitionedConstruction gen_ehss_blowup(int r) {
  require(r >= 2, "RK_r^- blow-up needs r >= 2");
  std::vector<int> sizes(static_cast<std::size_t>(r), 3);
  sizes[0] = 2;
  sizes[1] = 2;
  return blow_up(gen_rk_minus(r), sizes);
}

PartitionedConstruction blow_up(const ColoredGraph& pattern, const std::vector<int>& sizes) {
  require(static_cast<int>(sizes.size()) == pattern.order(), "blow-up needs one size per pattern vertex");
  std::vector<std::pair<std::string, int>> blocks;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    require(sizes[i] >= 1, "blow-up class sizes must be positive");
    blocks.emplace_back("V" + std::to_string(i + 1), sizes[i]);
  }
  auto parts = layout(blocks);
  ColoredGraph g(total_size(parts));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      fill_between(g, parts[i], parts[j], pattern.weight(static_cast<int>(i), static_cast<int>(j)));
    }
  }
  return {std::move(g), std::move(parts)};
}

}  // namespace wgraph
