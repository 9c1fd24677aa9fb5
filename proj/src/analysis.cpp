#include "wgraph/analysis.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>

#include "wgraph/constructions.hpp"
#include "wgraph/threshold.hpp"

namespace wgraph {

namespace {

bool creates_member(const ColoredGraph& g, const std::vector<ColoredGraph>& family, int u, int v) {
  for (const auto& f : family) {
    if (find_embedding_through(f, g, u, v)) return true;
  }
  return false;
}

}  // namespace

ColoredGraph extremal_completion(const ColoredGraph& g, const std::vector<ColoredGraph>& family,
                                 CompletionPolicy policy) {
  if (!is_free(g, family).free) throw std::invalid_argument("extremal_completion needs a family-free input");
  ColoredGraph cur = g;
  const int n = g.order();
  std::vector<Edge> pairs;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) pairs.push_back({x, y});
  }
  std::mt19937_64 rng(policy.seed);
  bool changed = true;
  while (changed) {
    changed = false;
    if (policy.shuffled) std::shuffle(pairs.begin(), pairs.end(), rng);
    for (const auto& [x, y] : pairs) {
      const int w = cur.weight(x, y);
      if (w == 2) continue;
      cur.set(x, y, w + 1);
      if (creates_member(cur, family, x, y)) {
        cur.set(x, y, w);
      } else {
        changed = true;
      }
    }
  }
  return cur;
}

bool is_extremal(const ColoredGraph& g, const std::vector<ColoredGraph>& family) {
  if (!is_free(g, family).free) return false;
  ColoredGraph cur = g;
  for (int x = 0; x < g.order(); ++x) {
    for (int y = x + 1; y < g.order(); ++y) {
      const int w = cur.weight(x, y);
      if (w == 2) continue;
      cur.set(x, y, w + 1);
      const bool blocked = !is_free(cur, family).free;
      cur.set(x, y, w);
      if (!blocked) return false;
    }
  }
  return true;
}

std::vector<Triple> find_wicked(const ColoredGraph& g, bool blue_only) {
  std::vector<Triple> out;
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    for (VertexMask ys = g.red(x) & ~low_mask(x + 1); ys; ys &= ys - 1) {
      const int y = lowest(ys);
      VertexMask zs = blue_only ? (g.blue(x) & g.blue(y)) : (g.vertices() & ~g.red(x) & ~g.red(y));
      zs &= ~(bit(x) | bit(y));
      for (; zs; zs &= zs - 1) out.push_back({x, y, lowest(zs)});
    }
  }
  return out;
}

SecureAudit secure_audit(const ColoredGraph& g, int r) {
  if (r < 2) throw std::invalid_argument("secure_audit needs r >= 2");
  SecureAudit audit;
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const int w = g.weight(x, y);
      if (w == 2) continue;
      if (find_red_clique(g, g.red(x) & g.red(y), r - 2)) continue;
      (w == 1 ? audit.insecure_blue : audit.insecure_green).push_back({x, y});
    }
  }
  return audit;
}

std::string to_string(DecomposeStep s) {
  switch (s) {
    case DecomposeStep::None: return "none";
    case DecomposeStep::WickedTriangle: return "wicked_triangle";
    case DecomposeStep::Equivalence: return "equivalence";
    case DecomposeStep::Classify: return "classify";
    case DecomposeStep::ClassCount: return "class_count";
    case DecomposeStep::Bipartition: return "bipartition";
    case DecomposeStep::Assemble: return "assemble";
  }
  return "?";
}

namespace {

// BFS 2-colouring of the blue graph on `cls`. On failure `witness` receives
// an odd closed walk through the conflicting blue pair.
bool bipartition(const ColoredGraph& g, const std::vector<int>& cls, std::vector<int>& b, std::vector<int>& c,
                 std::vector<int>& witness) {
  VertexMask inside = 0;
  for (int v : cls) inside |= bit(v);
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
  for (int s : cls) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (VertexMask m = g.blue(u) & inside; m; m &= m - 1) {
        const int v = lowest(m);
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          parent[v] = u;
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          // Odd cycle: path u -> lca and v -> lca.
          std::vector<int> pu{u};
          std::vector<int> pv{v};
          while (parent[pu.back()] >= 0) pu.push_back(parent[pu.back()]);
          while (parent[pv.back()] >= 0) pv.push_back(parent[pv.back()]);
          while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
            pu.pop_back();
            pv.pop_back();
          }
          witness.assign(pu.begin(), pu.end());
          witness.insert(witness.end(), pv.rbegin() + 1, pv.rend());
          return false;
        }
      }
    }
  }
  for (int v : cls) (side[v] == 0 ? b : c).push_back(v);
  return true;
}

std::optional<Triple> blue_triangle(const ColoredGraph& g, const std::vector<int>& cls) {
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      if (g.weight(cls[i], cls[j]) != 1) continue;
      for (std::size_t k = j + 1; k < cls.size(); ++k) {
        if (g.weight(cls[i], cls[k]) == 1 && g.weight(cls[j], cls[k]) == 1) return Triple{cls[i], cls[j], cls[k]};
      }
    }
  }
  return std::nullopt;
}

void fail(Decomposition& d, DecomposeStep step, std::string why, std::vector<int> witness = {}) {
  d.succeeded = false;
  d.failed_step = step;
  d.diagnosis = std::move(why);
  d.witness = std::move(witness);
}

}  // namespace

Decomposition decompose(const ColoredGraph& g, int r) {
  if (r < 3) throw std::invalid_argument("decompose needs r >= 3");
  Decomposition d;
  const int n = g.order();
  d.family_free = is_free(g, gen_family(2 * r)).free;
  d.degree_ok = n >= 1 && exceeds_threshold(min_degree(g), n, even_threshold(r));

  // (1) no wicked triangles
  const auto wicked = find_wicked(g, false);
  if (!wicked.empty()) {
    const auto& t = wicked.front();
    fail(d, DecomposeStep::WickedTriangle, "wicked triangle present", {t[0], t[1], t[2]});
    return d;
  }

  // (2) classes of the relation weight <= 1
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> raw_classes;
  for (int x = 0; x < n; ++x) {
    if (owner[x] >= 0) continue;
    const VertexMask cls = (g.vertices() & ~g.red(x));
    std::vector<int> members;
    for (VertexMask m = cls; m; m &= m - 1) {
      const int y = lowest(m);
      if (owner[y] >= 0) {
        fail(d, DecomposeStep::Equivalence, "relation weight <= 1 is not transitive", {x, y});
        return d;
      }
      owner[y] = static_cast<int>(raw_classes.size());
      members.push_back(y);
    }
    raw_classes.push_back(std::move(members));
  }
  for (const auto& cls : raw_classes) {
    for (int a : cls) {
      for (int b : cls) {
        if (a != b && g.weight(a, b) == 2) {
          fail(d, DecomposeStep::Equivalence, "relation weight <= 1 is not transitive", {a, b});
          return d;
        }
      }
    }
  }

  // (3) blue-containing classes first, then green cliques; each by smallest vertex
  for (const auto& cls : raw_classes) {
    DecompositionClass dc;
    dc.vertices = cls;
    for (int v : cls) dc.has_blue = dc.has_blue || (g.blue(v) != 0);
    d.classes.push_back(std::move(dc));
  }
  std::stable_sort(d.classes.begin(), d.classes.end(),
                   [](const DecompositionClass& a, const DecompositionClass& b) { return a.has_blue && !b.has_blue; });
  d.m = static_cast<int>(d.classes.size());
  d.s = static_cast<int>(std::count_if(d.classes.begin(), d.classes.end(), [](const auto& c) { return c.has_blue; }));

  // (4) class count
  if (d.m + d.s != r) {
    fail(d, DecomposeStep::ClassCount,
         "m + s = " + std::to_string(d.m) + " + " + std::to_string(d.s) + " != r = " + std::to_string(r));
    return d;
  }

  // (5) each blue graph is triangle-free and bipartite
  for (auto& cls : d.classes) {
    if (!cls.has_blue) continue;
    if (auto t = blue_triangle(g, cls.vertices)) {
      fail(d, DecomposeStep::Bipartition, "blue triangle inside a class", {(*t)[0], (*t)[1], (*t)[2]});
      return d;
    }
    std::vector<int> witness;
    if (!bipartition(g, cls.vertices, cls.side_b, cls.side_c, witness)) {
      fail(d, DecomposeStep::Bipartition, "odd blue cycle inside a class", witness);
      return d;
    }
  }

  // (6) certificates
  if (d.s == 0) {
    fail(d, DecomposeStep::Assemble, "no class spans a blue pair (s = 0); the classes form a red clique of order r");
    return d;
  }
  HomCertificate matching;
  matching.kind = TargetKind::General;
  matching.r = r;
  matching.target = ColoredGraph(r);
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) matching.target.set(i, j, 2);
  }
  for (const auto& cls : d.classes) {
    if (cls.has_blue) {
      const int i = static_cast<int>(matching.classes.size());
      matching.classes.push_back(cls.side_b);
      matching.classes.push_back(cls.side_c);
      matching.target.set(i, i + 1, 1);
    } else {
      matching.classes.push_back(cls.vertices);
    }
  }
  HomCertificate minus;
  minus.kind = TargetKind::RkMinus;
  minus.r = r;
  minus.target = gen_rk_minus(r);
  minus.classes = matching.classes;
  if (minus.classes[0].front() > minus.classes[1].front()) std::swap(minus.classes[0], minus.classes[1]);
  if (!verify_certificate(g, matching) || !verify_certificate(g, minus)) {
    fail(d, DecomposeStep::Assemble, "assembled certificate failed verification");
    return d;
  }
  d.matching_certificate = std::move(matching);
  d.certificate = std::move(minus);
  d.succeeded = true;
  return d;
}

StructureReport analyze(const ColoredGraph& g, int r) {
  if (r < 3) throw std::invalid_argument("analyze needs r >= 3");
  StructureReport rep;
  rep.r = r;
  rep.wicked_triangles = find_wicked(g, false);
  rep.blue_wicked = find_wicked(g, true);
  rep.audit = secure_audit(g, r);
  rep.j_embedding = find_embedding(gen_j(r).graph, g);
  rep.equivalence_ok = rep.wicked_triangles.empty();
  rep.decomposition = decompose(g, r);
  return rep;
}

}  // namespace wgraph
