#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "wgraph/colored_graph.hpp"

namespace wgraph {

/// Largest order for which canonical forms are computed (28 pairs, 56 bits).
inline constexpr int kCanonicalBound = 8;

/// Isomorphism-class identifier. `code` packs the row-major upper-triangle
/// weight string of a canonical relabeling, two bits per pair, first pair in
/// the most significant position, so integer order is string order.
struct CanonicalForm {
  int n = 0;
  std::uint64_t code = 0;

  std::string str() const;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical form. For n <= 7 the code is the lexicographic minimum over all
/// n! relabelings; for n = 8 it is the code of the refined canonical labeling.
/// Throws std::invalid_argument if n exceeds `bound` (at most 8).
CanonicalForm canonical_form(const ColoredGraph& g, int bound = kCanonicalBound);

/// Lexicographic minimum over all relabelings, n <= 8.
CanonicalForm min_permutation_form(const ColoredGraph& g);

struct CanonicalLabeling {
  std::uint64_t code = 0;        ///< column-major packed code of the relabeled graph
  std::vector<int> labeling;     ///< labeling[position] = vertex
};

/// Canonical labeling by colour refinement followed by a branch-and-bound
/// minimisation over relabelings that respect the refined ordered partition.
/// Isomorphic graphs receive equal codes. n <= 8.
CanonicalLabeling refined_labeling(const ColoredGraph& g);

/// Row-major packed code of g as labelled.
std::uint64_t packed_code(const ColoredGraph& g);

}  // namespace wgraph
