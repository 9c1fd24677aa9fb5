#include "wgraph/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace wgraph {

namespace {

void check_bound(int n, int bound) {
  if (bound > kCanonicalBound) throw std::invalid_argument("canonical form bound cannot exceed 8");
  if (n > bound) {
    throw std::invalid_argument("canonical form requested for order " + std::to_string(n) + " above bound " +
                                std::to_string(bound));
  }
}

// Colour refinement. Returns the refined vertex colours (dense ranks); the
// ranks depend only on the isomorphism type of (g, vertex).
std::vector<int> refine_colors(const ColoredGraph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) sig[v] = {popcount(g.red(v)), popcount(g.blue(v))};

  int classes = 0;
  for (;;) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      color[order[i]] = rank;
    }
    const int next = n == 0 ? 0 : rank + 1;
    if (next == classes || next == n) {
      classes = next;
      break;
    }
    classes = next;
    for (int v = 0; v < n; ++v) {
      std::vector<int> s(static_cast<std::size_t>(3 * classes + 1), 0);
      s[0] = color[v];
      for (int u = 0; u < n; ++u) {
        if (u != v) ++s[1 + 3 * color[u] + g.weight(v, u)];
      }
      sig[v] = std::move(s);
    }
  }
  return color;
}

struct LabelSearch {
  const ColoredGraph& g;
  int n;
  int total_pairs;
  std::vector<int> cell_of_position;
  std::vector<int> color;
  std::vector<int> current;
  std::vector<int> best_labeling;
  std::uint64_t best = 0;
  bool have_best = false;
  VertexMask used = 0;

  void run(int p, std::uint64_t prefix) {
    if (p == n) {
      if (!have_best || prefix < best) {
        best = prefix;
        best_labeling = current;
        have_best = true;
      }
      return;
    }
    const int known = pair_count(p + 1);
    for (int v = 0; v < n; ++v) {
      if ((used & bit(v)) || color[v] != cell_of_position[p]) continue;
      std::uint64_t col = 0;
      for (int i = 0; i < p; ++i) col = (col << 2) | static_cast<std::uint64_t>(g.weight(current[i], v));
      const std::uint64_t next = (prefix << (2 * p)) | col;
      if (have_best && next > (best >> (2 * (total_pairs - known)))) continue;
      current[p] = v;
      used |= bit(v);
      run(p + 1, next);
      used &= ~bit(v);
    }
  }
};

}  // namespace

std::string CanonicalForm::str() const {
  const int pairs = pair_count(n);
  std::string s(static_cast<std::size_t>(pairs), '0');
  for (int k = 0; k < pairs; ++k) s[k] = static_cast<char>('0' + ((code >> (2 * (pairs - 1 - k))) & 3U));
  return s;
}

std::uint64_t packed_code(const ColoredGraph& g) {
  const int n = g.order();
  if (pair_count(n) > 32) throw std::invalid_argument("packed codes need at most 32 pairs");
  std::uint64_t c = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) c = (c << 2) | static_cast<std::uint64_t>(g.weight(x, y));
  }
  return c;
}

CanonicalForm min_permutation_form(const ColoredGraph& g) {
  const int n = g.order();
  check_bound(n, kCanonicalBound);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t c = 0;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) c = (c << 2) | static_cast<std::uint64_t>(g.weight(perm[x], perm[y]));
    }
    best = std::min(best, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {n, n < 2 ? 0 : best};
}

CanonicalLabeling refined_labeling(const ColoredGraph& g) {
  const int n = g.order();
  check_bound(n, kCanonicalBound);
  LabelSearch s{g, n, pair_count(n), {}, refine_colors(g), std::vector<int>(static_cast<std::size_t>(n)), {}};
  std::vector<int> sorted = s.color;
  std::sort(sorted.begin(), sorted.end());
  s.cell_of_position = sorted;
  s.run(0, 0);
  return {s.best, s.best_labeling};
}

CanonicalForm canonical_form(const ColoredGraph& g, int bound) {
  check_bound(g.order(), bound);
  if (g.order() <= 7) return min_permutation_form(g);
  const auto lab = refined_labeling(g);
  return {g.order(), packed_code(g.relabeled(lab.labeling))};
}

}  // namespace wgraph
