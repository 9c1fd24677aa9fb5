#pragma once

// Brute-force reference implementations. They only use the weight accessors
// of ColoredGraph and share no search code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "wgraph/colored_graph.hpp"

namespace oracle {

using wgraph::ColoredGraph;

/// Calls f on every labelled graph of order n with weights in {0..cap}.
inline void for_each_graph(int n, int cap, const std::function<void(const ColoredGraph&)>& f) {
  const int p = wgraph::pair_count(n);
  std::vector<int> w(static_cast<std::size_t>(p), 0);
  while (true) {
    f(ColoredGraph::from_pairs(n, w));
    int i = p - 1;
    while (i >= 0 && w[i] == cap) w[i--] = 0;
    if (i < 0) return;
    ++w[i];
  }
}

inline ColoredGraph random_graph(int n, std::mt19937_64& rng, int cap = 2) {
  std::uniform_int_distribution<int> d(0, cap);
  std::vector<int> w(static_cast<std::size_t>(wgraph::pair_count(n)));
  for (auto& x : w) x = d(rng);
  return ColoredGraph::from_pairs(n, w);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Upper-triangle string of g read through the labelling p.
inline std::string code_under(const ColoredGraph& g, const std::vector<int>& p) {
  std::string s;
  for (int i = 0; i < g.order(); ++i) {
    for (int j = i + 1; j < g.order(); ++j) s += static_cast<char>('0' + g.weight(p[i], p[j]));
  }
  return s;
}

/// Lexicographically least code over all relabelings.
inline std::string min_code(const ColoredGraph& g) {
  std::vector<int> p(static_cast<std::size_t>(g.order()));
  std::iota(p.begin(), p.end(), 0);
  std::string best = code_under(g, p);
  while (std::next_permutation(p.begin(), p.end())) best = std::min(best, code_under(g, p));
  return best;
}

/// Number of isomorphism classes of 3-coloured complete graphs on n vertices,
/// by Burnside's lemma over the action of S_n on pairs.
inline std::uint64_t class_count(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t total = 0;
  std::uint64_t perms = 0;
  do {
    // cycles of the induced permutation on unordered pairs
    std::vector<char> seen(static_cast<std::size_t>(n * n), 0);
    int cycles = 0;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (seen[x * n + y]) continue;
        ++cycles;
        int a = x, b = y;
        while (!seen[std::min(a, b) * n + std::max(a, b)]) {
          seen[std::min(a, b) * n + std::max(a, b)] = 1;
          a = p[a];
          b = p[b];
        }
      }
    }
    std::uint64_t pw = 1;
    for (int i = 0; i < cycles; ++i) pw *= 3;
    total += pw;
    ++perms;
  } while (std::next_permutation(p.begin(), p.end()));
  return total / perms;
}

/// Tries every injective map of pattern vertices into host vertices.
inline bool embeds(const ColoredGraph& pattern, const ColoredGraph& host) {
  const int k = pattern.order();
  const int n = host.order();
  if (k > n) return false;
  std::vector<int> map;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool()> rec = [&]() -> bool {
    const int i = static_cast<int>(map.size());
    if (i == k) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = host.weight(map[j], v) >= pattern.weight(j, i);
      if (!ok) continue;
      used[v] = 1;
      map.push_back(v);
      if (rec()) return true;
      map.pop_back();
      used[v] = 0;
    }
    return false;
  };
  return rec();
}

inline bool free_of(const ColoredGraph& host, const std::vector<ColoredGraph>& family) {
  return std::none_of(family.begin(), family.end(), [&](const ColoredGraph& f) { return embeds(f, host); });
}

/// Smallest number of green cliques covering the vertices (subset DP).
inline int green_clique_cover(const ColoredGraph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  const std::uint32_t full = (1U << n) - 1;
  std::vector<char> clique(full + 1, 0);
  for (std::uint32_t s = 0; s <= full; ++s) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (!(s >> x & 1U)) continue;
      for (int y = x + 1; y < n && ok; ++y) {
        if ((s >> y & 1U) && g.weight(x, y) != 0) ok = false;
      }
    }
    clique[s] = ok;
  }
  std::vector<int> cover(full + 1, 1 << 20);
  cover[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    // the class containing the lowest vertex of s
    const std::uint32_t low = s & (~s + 1);
    for (std::uint32_t t = s; t; t = (t - 1) & s) {
      if ((t & low) && clique[t]) cover[s] = std::min(cover[s], cover[s ^ t] + 1);
    }
  }
  return cover[full];
}

/// Every assignment of vertices to r classes; classes green, 0 and 1 red-free.
inline bool hom_rk_minus(const ColoredGraph& g, int r) {
  const int n = g.order();
  std::vector<int> cls(static_cast<std::size_t>(n), 0);
  while (true) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = x + 1; y < n && ok; ++y) {
        const int w = g.weight(x, y);
        if (cls[x] == cls[y] && w != 0) ok = false;
        if (w == 2 && ((cls[x] == 0 && cls[y] == 1) || (cls[x] == 1 && cls[y] == 0))) ok = false;
      }
    }
    if (ok) return true;
    int i = n - 1;
    while (i >= 0 && cls[i] == r - 1) cls[i--] = 0;
    if (i < 0) return false;
    ++cls[i];
  }
}

/// Every map into the target vertex set.
inline bool hom_general(const ColoredGraph& g, const ColoredGraph& t) {
  const int n = g.order();
  const int m = t.order();
  if (n == 0) return true;
  if (m == 0) return false;
  std::vector<int> phi(static_cast<std::size_t>(n), 0);
  while (true) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = x + 1; y < n && ok; ++y) {
        const int tw = phi[x] == phi[y] ? 0 : t.weight(phi[x], phi[y]);
        if (g.weight(x, y) > tw) ok = false;
      }
    }
    if (ok) return true;
    int i = n - 1;
    while (i >= 0 && phi[i] == m - 1) phi[i--] = 0;
    if (i < 0) return false;
    ++phi[i];
  }
}

inline long edge_sum(const ColoredGraph& g) {
  long s = 0;
  for (int x = 0; x < g.order(); ++x) {
    for (int y = x + 1; y < g.order(); ++y) s += g.weight(x, y);
  }
  return s;
}

/// max e(G) over family-free labelled graphs, or -1 if there are none.
inline long ex(int n, const std::vector<ColoredGraph>& family, int cap) {
  long best = -1;
  for_each_graph(n, cap, [&](const ColoredGraph& g) {
    const long s = edge_sum(g);
    if (s > best && free_of(g, family)) best = s;
  });
  return best;
}

}  // namespace oracle
