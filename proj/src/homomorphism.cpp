#include "wgraph/homomorphism.hpp"

#include <algorithm>
#include <stdexcept>

#include "wgraph/constructions.hpp"

namespace wgraph {

std::string to_string(TargetKind k) {
  switch (k) {
    case TargetKind::Rk: return "rk";
    case TargetKind::RkMinus: return "rk_minus";
    case TargetKind::General: return "general";
  }
  return "?";
}

std::string to_string(HomStatus s) {
  switch (s) {
    case HomStatus::Found: return "found";
    case HomStatus::None: return "none";
    case HomStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

namespace {

// Backtracking map into a target. At each node the unassigned host vertex
// with the fewest admissible target vertices is branched on. Target vertices
// that are twins (same weights to every other target vertex) are
// interchangeable, so an empty class is only opened if it is the first empty
// class of its twin group.
class HomSearch {
 public:
  HomSearch(const ColoredGraph& g, const ColoredGraph& target, std::uint64_t budget)
      : g_(g), t_(target), budget_(budget) {
    const int k = t_.order();
    members_.assign(static_cast<std::size_t>(k), 0);
    group_.assign(static_cast<std::size_t>(k), -1);
    for (int c = 0; c < k; ++c) {
      if (group_[c] >= 0) continue;
      group_[c] = c;
      for (int d = c + 1; d < k; ++d) {
        if (group_[d] < 0 && twins(c, d)) group_[d] = c;
      }
    }
    assignment_.assign(static_cast<std::size_t>(g_.order()), -1);
  }

  HomStatus run() {
    if (g_.order() > 0 && t_.order() == 0) return HomStatus::None;
    return search(g_.vertices());
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& assignment() const { return assignment_; }
  const std::vector<int>& groups() const { return group_; }

 private:
  bool twins(int c, int d) const {
    for (int e = 0; e < t_.order(); ++e) {
      if (e != c && e != d && t_.weight(c, e) != t_.weight(d, e)) return false;
    }
    return true;
  }

  // Bitmask of target vertices x can be mapped to now.
  std::uint64_t admissible(int x) const {
    const VertexMask pos = g_.positive(x);
    const VertexMask red = g_.red(x);
    std::uint64_t out = 0;
    VertexMask seen_empty_groups = 0;
    for (int c = 0; c < t_.order(); ++c) {
      if (members_[c] == 0) {
        if (seen_empty_groups & bit(group_[c])) continue;
        seen_empty_groups |= bit(group_[c]);
      }
      bool ok = (pos & members_[c]) == 0;
      for (int d = 0; ok && d < t_.order(); ++d) {
        if (d == c || members_[d] == 0) continue;
        const int w = t_.weight(c, d);
        if (w == 0) {
          ok = (pos & members_[d]) == 0;
        } else if (w == 1) {
          ok = (red & members_[d]) == 0;
        }
      }
      if (ok) out |= bit(c);
    }
    return out;
  }

  HomStatus search(VertexMask unassigned) {
    if (unassigned == 0) return HomStatus::Found;
    if (++nodes_ > budget_) return HomStatus::BudgetExceeded;
    int pick = -1;
    std::uint64_t pick_opts = 0;
    int pick_count = 65;
    for (VertexMask m = unassigned; m; m &= m - 1) {
      const int x = lowest(m);
      const std::uint64_t opts = admissible(x);
      const int cnt = popcount(opts);
      if (cnt == 0) return HomStatus::None;
      if (cnt < pick_count || (cnt == pick_count && popcount(g_.positive(x)) > popcount(g_.positive(pick)))) {
        pick = x;
        pick_opts = opts;
        pick_count = cnt;
      }
    }
    for (std::uint64_t o = pick_opts; o; o &= o - 1) {
      const int c = lowest(o);
      members_[c] |= bit(pick);
      assignment_[pick] = c;
      const HomStatus s = search(unassigned & ~bit(pick));
      if (s != HomStatus::None) return s;
      members_[c] &= ~bit(pick);
      assignment_[pick] = -1;
    }
    return HomStatus::None;
  }

  const ColoredGraph& g_;
  const ColoredGraph& t_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<VertexMask> members_;
  std::vector<int> group_;
  std::vector<int> assignment_;
};

// Classes are reordered within each twin group by smallest member, empty
// classes last, which keeps certificates reproducible.
std::vector<std::vector<int>> canonical_classes(const std::vector<int>& assignment, const std::vector<int>& groups,
                                                int k) {
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(k));
  for (std::size_t x = 0; x < assignment.size(); ++x) classes[assignment[x]].push_back(static_cast<int>(x));
  std::vector<std::vector<int>> out(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) {
    if (groups[c] != c) continue;
    std::vector<int> slots;
    for (int d = 0; d < k; ++d) {
      if (groups[d] == c) slots.push_back(d);
    }
    std::vector<std::vector<int>> group_classes;
    for (int d : slots) group_classes.push_back(classes[d]);
    std::stable_sort(group_classes.begin(), group_classes.end(), [](const auto& a, const auto& b) {
      if (a.empty() != b.empty()) return b.empty();
      return !a.empty() && a.front() < b.front();
    });
    for (std::size_t i = 0; i < slots.size(); ++i) out[slots[i]] = std::move(group_classes[i]);
  }
  return out;
}

HomResult solve(const ColoredGraph& g, const ColoredGraph& target, TargetKind kind, int r, std::uint64_t budget) {
  HomSearch s(g, target, budget);
  HomResult res;
  res.status = s.run();
  res.nodes = s.nodes();
  if (res.status == HomStatus::Found) {
    HomCertificate c{kind, r, target, canonical_classes(s.assignment(), s.groups(), target.order())};
    if (!verify_certificate(g, c)) throw std::logic_error("homomorphism search produced an invalid certificate");
    res.certificate = std::move(c);
  }
  return res;
}

}  // namespace

HomResult find_hom_rk(const ColoredGraph& g, int r, std::uint64_t budget) {
  if (r < 1) throw std::invalid_argument("find_hom_rk needs r >= 1");
  if (r > kMaxVertices) throw std::invalid_argument("target order exceeds 64");
  return solve(g, gen_rk(r), TargetKind::Rk, r, budget);
}

HomResult find_hom_rk_minus(const ColoredGraph& g, int r, std::uint64_t budget) {
  if (r < 2) throw std::invalid_argument("find_hom_rk_minus needs r >= 2");
  if (r > kMaxVertices) throw std::invalid_argument("target order exceeds 64");
  return solve(g, gen_rk_minus(r), TargetKind::RkMinus, r, budget);
}

HomResult find_hom_general(const ColoredGraph& g, const ColoredGraph& target, std::uint64_t budget) {
  return solve(g, target, TargetKind::General, target.order(), budget);
}

bool verify_certificate(const ColoredGraph& g, const HomCertificate& c) {
  const int n = g.order();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    for (int x : c.classes[i]) {
      if (x < 0 || x >= n) throw std::invalid_argument("certificate vertex out of range");
      if (owner[x] >= 0) throw std::invalid_argument("certificate classes overlap at vertex " + std::to_string(x));
      owner[x] = static_cast<int>(i);
    }
  }
  for (int x = 0; x < n; ++x) {
    if (owner[x] < 0) throw std::invalid_argument("certificate does not cover vertex " + std::to_string(x));
  }

  const int k = static_cast<int>(c.classes.size());
  switch (c.kind) {
    case TargetKind::Rk:
      if (c.r < 1 || k > c.r) return false;
      break;
    case TargetKind::RkMinus:
      if (c.r < 2 || k > c.r || k < 2) return false;
      break;
    case TargetKind::General:
      if (k > c.target.order()) return false;
      break;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const int w = g.at(x, y);
      const int cx = owner[x];
      const int cy = owner[y];
      if (cx == cy) {
        if (w != 0) return false;
        continue;
      }
      switch (c.kind) {
        case TargetKind::Rk: break;
        case TargetKind::RkMinus:
          if (w == 2 && std::min(cx, cy) == 0 && std::max(cx, cy) == 1) return false;
          break;
        case TargetKind::General:
          if (w > c.target.at(cx, cy)) return false;
          break;
      }
    }
  }
  return true;
}

}  // namespace wgraph
