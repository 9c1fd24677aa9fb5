#pragma once

#include <optional>
#include <vector>

#include "wgraph/colored_graph.hpp"

namespace wgraph {

/// Injective map from pattern vertices to host vertices: map[i] hosts
/// pattern vertex i.
struct Embedding {
  std::vector<int> map;
};

/// Searches for an injective map under which every host weight dominates the
/// corresponding pattern weight. Pattern vertices are placed in a fixed order
/// (largest pattern degree first, then most weighted links to placed
/// vertices), so witnesses are reproducible.
std::optional<Embedding> find_embedding(const ColoredGraph& pattern, const ColoredGraph& host);

/// Like find_embedding, but only considers embeddings that send some pattern
/// pair of positive weight onto the host pair {u, v}. Used to test whether
/// raising the weight of {u, v} created a copy of the pattern.
std::optional<Embedding> find_embedding_through(const ColoredGraph& pattern, const ColoredGraph& host, int u, int v);

/// Checks the dominance condition directly; independent of the search.
bool is_embedding(const ColoredGraph& pattern, const ColoredGraph& host, const Embedding& e);

struct FreenessResult {
  bool free = true;
  int member = -1;  ///< index into the family of the first member found
  std::optional<Embedding> witness;
};

/// True iff no family member embeds in host. Members are tried in increasing
/// order of their order (ties by list position).
FreenessResult is_free(const ColoredGraph& host, const std::vector<ColoredGraph>& family);

struct CliqueResult {
  int size = 0;
  std::vector<int> vertices;
};

/// Largest vertex set whose pairs all have weight >= 1 (branch and bound).
CliqueResult max_blue_clique(const ColoredGraph& host);

/// Vertices outside `clique` that are red to every clique vertex. Throws
/// std::invalid_argument if `clique` is not a red clique.
std::vector<int> common_red_neighborhood(const ColoredGraph& host, const std::vector<int>& clique);

/// Some red clique of exactly `size` vertices inside `candidates`, if any.
std::optional<std::vector<int>> find_red_clique(const ColoredGraph& host, VertexMask candidates, int size);

}  // namespace wgraph
