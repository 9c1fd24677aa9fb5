#pragma once

#include <string>
#include <vector>

#include "wgraph/colored_graph.hpp"

namespace wgraph {

/// A contiguous block of vertices [first, first + size) with a name.
struct Part {
  std::string name;
  int first = 0;
  int size = 0;

  int end() const { return first + size; }
  bool contains(int v) const { return v >= first && v < end(); }
};

/// A generated graph together with its named vertex classes. Parts are laid
/// out in order (A-parts, then B-parts, then C-parts), are disjoint, and
/// cover every vertex.
struct PartitionedConstruction {
  ColoredGraph graph;
  std::vector<Part> parts;

  const Part& part(const std::string& name) const;
};

ColoredGraph gen_rk(int n);
ColoredGraph gen_bk(int n);
/// Red clique with the pair (0, 1) recoloured blue; n >= 2.
ColoredGraph gen_rk_minus(int n);

/// G_{a+b,b}: order a = a_plus_b - b, a red b-clique on vertices 0..b-1
/// joined by blue pairs to a blue (a-b)-clique. Requires a >= b >= 1.
ColoredGraph gen_gab(int a_plus_b, int b);

/// The forbidden family [G_{t,1}, ..., G_{t,floor(t/2)}]; t >= 2.
std::vector<ColoredGraph> gen_family(int t);

/// Order-q graph with parts A (k, red clique), B (p_k), C (rest) where
/// p_k = max(0, k + q + 1 - 2b); A is red to A and C, all other pairs blue.
/// Requires q > b >= 1 and 0 <= k <= b - 1.
PartitionedConstruction gen_hk(int q, int b, int k);

/// The order-(r+1) graph J on A (r-3 vertices), b', b'', c', c'': c'c'' green,
/// b'c' and b''c'' blue, everything else red. r >= 3.
PartitionedConstruction gen_j(int r);

/// Red-coloured five-cycle-plus-cliques construction on scale * (3r - 1)
/// vertices with every degree equal to scale * (6r - 8). r >= 2.
PartitionedConstruction gen_odd_extremal(int r, int scale);

/// Construction on scale * (7r - 5) vertices with parts A_1..A_{r-3} (7s),
/// B', B'' (6s), C', C'' (2s); every degree equals scale * (14r - 24). r >= 3.
PartitionedConstruction gen_even_extremal(int r, int scale);

/// Blow-up of RK_r^- with the two blue-joined classes of size 2 and the
/// remaining r - 2 classes of size 3. r >= 2.
PartitionedConstruction gen_ehss_blowup(int r);

/// Replaces vertex i of `pattern` by a green clique of sizes[i] vertices;
/// pairs between classes inherit the pattern weight.
PartitionedConstruction blow_up(const ColoredGraph& pattern, const std::vector<int>& sizes);

}  // namespace wgraph
