#include "wgraph/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wgraph {

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const ColoredGraph& pattern, const ColoredGraph& host) : p_(pattern), h_(host) {
    const int k = p_.order();
    map_.assign(static_cast<std::size_t>(k), -1);
    for (int v = 0; v < h_.order(); ++v) {
      host_red_.push_back(popcount(h_.red(v)));
      host_pos_.push_back(popcount(h_.positive(v)));
    }
    for (int i = 0; i < k; ++i) {
      need_red_.push_back(popcount(p_.red(i)));
      need_pos_.push_back(popcount(p_.positive(i)));
    }
  }

  // Placement order: highest pattern degree first, then the vertex with the
  // most weight towards already ordered vertices; ties by index.
  void order_vertices(VertexMask preplaced) {
    const int k = p_.order();
    order_.clear();
    VertexMask placed = preplaced;
    for (int step = popcount(preplaced); step < k; ++step) {
      int best = -1;
      int best_link = -1;
      int best_deg = -1;
      for (int i = 0; i < k; ++i) {
        if (placed & bit(i)) continue;
        const int link = popcount(p_.blue(i) & placed) + 2 * popcount(p_.red(i) & placed);
        const int d = degree(p_, i);
        if (link > best_link || (link == best_link && d > best_deg)) {
          best = i;
          best_link = link;
          best_deg = d;
        }
      }
      order_.push_back(best);
      placed |= bit(best);
    }
  }

  bool preplace(int i, int v) {
    if (!fits(i, v)) return false;
    map_[i] = v;
    used_ |= bit(v);
    return true;
  }

  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const int i = order_[depth];
    VertexMask cand = h_.vertices() & ~used_;
    for (int j = 0; j < p_.order(); ++j) {
      const int hj = map_[j];
      if (hj < 0) continue;
      const int w = p_.weight(i, j);
      if (w == 2) {
        cand &= h_.red(hj);
      } else if (w == 1) {
        cand &= h_.positive(hj);
      }
    }
    while (cand) {
      const int v = lowest(cand);
      cand &= cand - 1;
      if (host_red_[v] < need_red_[i] || host_pos_[v] < need_pos_[i]) continue;
      map_[i] = v;
      used_ |= bit(v);
      if (run(depth + 1)) return true;
      used_ &= ~bit(v);
      map_[i] = -1;
    }
    return false;
  }

  Embedding result() const { return {map_}; }

 private:
  bool fits(int i, int v) const {
    if (used_ & bit(v)) return false;
    for (int j = 0; j < p_.order(); ++j) {
      if (map_[j] >= 0 && h_.weight(v, map_[j]) < p_.weight(i, j)) return false;
    }
    return true;
  }

  const ColoredGraph& p_;
  const ColoredGraph& h_;
  std::vector<int> map_;
  std::vector<int> order_;
  std::vector<int> host_red_, host_pos_, need_red_, need_pos_;
  VertexMask used_ = 0;
};

}  // namespace

std::optional<Embedding> find_embedding(const ColoredGraph& pattern, const ColoredGraph& host) {
  if (pattern.order() > host.order()) return std::nullopt;
  EmbeddingSearch s(pattern, host);
  s.order_vertices(0);
  if (s.run()) return s.result();
  return std::nullopt;
}

std::optional<Embedding> find_embedding_through(const ColoredGraph& pattern, const ColoredGraph& host, int u, int v) {
  if (pattern.order() > host.order()) return std::nullopt;
  const int hw = host.at(u, v);
  if (hw == 0 || u == v) return std::nullopt;
  for (int a = 0; a < pattern.order(); ++a) {
    for (int b = a + 1; b < pattern.order(); ++b) {
      const int pw = pattern.weight(a, b);
      if (pw == 0 || pw > hw) continue;
      for (int flip = 0; flip < 2; ++flip) {
        EmbeddingSearch s(pattern, host);
        const int ha = flip ? v : u;
        const int hb = flip ? u : v;
        if (!s.preplace(a, ha) || !s.preplace(b, hb)) continue;
        s.order_vertices(bit(a) | bit(b));
        if (s.run()) return s.result();
      }
    }
  }
  return std::nullopt;
}

bool is_embedding(const ColoredGraph& pattern, const ColoredGraph& host, const Embedding& e) {
  const int k = pattern.order();
  if (static_cast<int>(e.map.size()) != k) return false;
  for (int i = 0; i < k; ++i) {
    if (e.map[i] < 0 || e.map[i] >= host.order()) return false;
    for (int j = 0; j < i; ++j) {
      if (e.map[i] == e.map[j]) return false;
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (host.at(e.map[i], e.map[j]) < pattern.at(i, j)) return false;
    }
  }
  return true;
}

FreenessResult is_free(const ColoredGraph& host, const std::vector<ColoredGraph>& family) {
  std::vector<int> order(family.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return family[a].order() < family[b].order(); });
  for (int idx : order) {
    if (auto e = find_embedding(family[idx], host)) return {false, idx, std::move(e)};
  }
  return {};
}

namespace {

// Greedy colouring bound for maximum clique (Tomita style).
class CliqueSearch {
 public:
  explicit CliqueSearch(const ColoredGraph& g) : g_(g) {}

  void expand(VertexMask candidates, std::vector<int>& current) {
    if (candidates == 0) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    // Colour classes give an upper bound on the clique size within candidates.
    std::vector<int> order;
    std::vector<int> bound;
    VertexMask uncolored = candidates;
    int color = 0;
    while (uncolored) {
      ++color;
      VertexMask avail = uncolored;
      while (avail) {
        const int v = lowest(avail);
        avail &= ~bit(v);
        avail &= ~g_.positive(v);
        uncolored &= ~bit(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(current.size()) + bound[i] <= static_cast<int>(best_.size())) return;
      const int v = order[i];
      current.push_back(v);
      expand(candidates & g_.positive(v), current);
      current.pop_back();
      candidates &= ~bit(v);
    }
  }

  std::vector<int> best_;

 private:
  const ColoredGraph& g_;
};

bool red_clique_rec(const ColoredGraph& g, VertexMask cand, int need, std::vector<int>& cur) {
  if (need == 0) return true;
  if (popcount(cand) < need) return false;
  while (cand) {
    const int v = lowest(cand);
    cand &= cand - 1;
    cur.push_back(v);
    if (red_clique_rec(g, cand & g.red(v), need - 1, cur)) return true;
    cur.pop_back();
    if (popcount(cand) < need) return false;
  }
  return false;
}

}  // namespace

CliqueResult max_blue_clique(const ColoredGraph& host) {
  CliqueSearch s(host);
  std::vector<int> cur;
  s.expand(host.vertices(), cur);
  std::sort(s.best_.begin(), s.best_.end());
  return {static_cast<int>(s.best_.size()), s.best_};
}

std::vector<int> common_red_neighborhood(const ColoredGraph& host, const std::vector<int>& clique) {
  VertexMask members = 0;
  VertexMask common = host.vertices();
  for (std::size_t i = 0; i < clique.size(); ++i) {
    const int c = clique[i];
    if (c < 0 || c >= host.order()) throw std::out_of_range("clique vertex out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (host.weight(c, clique[j]) != 2 || c == clique[j]) throw std::invalid_argument("input is not a red clique");
    }
    members |= bit(c);
    common &= host.red(c);
  }
  common &= ~members;
  std::vector<int> out;
  for (VertexMask m = common; m; m &= m - 1) out.push_back(lowest(m));
  return out;
}

std::optional<std::vector<int>> find_red_clique(const ColoredGraph& host, VertexMask candidates, int size) {
  std::vector<int> cur;
  if (size < 0) return std::nullopt;
  if (red_clique_rec(host, candidates & host.vertices(), size, cur)) return cur;
  return std::nullopt;
}

}  // namespace wgraph
