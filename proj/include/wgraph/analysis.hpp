#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wgraph/colored_graph.hpp"
#include "wgraph/embedding.hpp"
#include "wgraph/homomorphism.hpp"

namespace wgraph {

/// Order in which extremal_completion sweeps the pairs.
struct CompletionPolicy {
  bool shuffled = false;  ///< false: lexicographic pair order every sweep
  std::uint64_t seed = 0;
};

/// Raises weights one step at a time while the graph stays family-free,
/// sweeping until a full sweep changes nothing. The result dominates g
/// pointwise and no single +1 increment keeps it family-free. Throws
/// std::invalid_argument if g is not family-free.
ColoredGraph extremal_completion(const ColoredGraph& g, const std::vector<ColoredGraph>& family,
                                 CompletionPolicy policy = {});

/// True iff g is family-free and every +1 increment of a single pair creates
/// a family member.
bool is_extremal(const ColoredGraph& g, const std::vector<ColoredGraph>& family);

using Triple = std::array<int, 3>;

/// Triples (x, y, z) with x < y, xy red and xz, yz not red; with blue_only
/// both xz and yz must be blue. Lexicographic order.
std::vector<Triple> find_wicked(const ColoredGraph& g, bool blue_only);

using Edge = std::array<int, 2>;

struct SecureAudit {
  std::vector<Edge> insecure_blue;
  std::vector<Edge> insecure_green;
};

/// Non-red pairs whose endpoints are not both in the common red
/// neighbourhood of any red (r-2)-clique. r >= 2.
SecureAudit secure_audit(const ColoredGraph& g, int r);

/// Classes of the relation "weight <= 1", valid only without wicked triangles.
struct DecompositionClass {
  std::vector<int> vertices;
  bool has_blue = false;
  std::vector<int> side_b;  ///< bipartition of the blue graph (blue classes only)
  std::vector<int> side_c;
};

enum class DecomposeStep {
  None = 0,
  WickedTriangle = 1,
  Equivalence = 2,
  Classify = 3,
  ClassCount = 4,
  Bipartition = 5,
  Assemble = 6,
};

std::string to_string(DecomposeStep s);

struct Decomposition {
  bool family_free = false;   ///< F_{2r}-freeness, re-checked
  bool degree_ok = false;     ///< delta > (14r-24)/(7r-5) n, re-checked
  bool succeeded = false;
  DecomposeStep failed_step = DecomposeStep::None;
  std::string diagnosis;
  std::vector<int> witness;   ///< wicked triple, odd blue cycle or blue triangle
  std::vector<DecompositionClass> classes;  ///< blue-containing classes first
  int m = 0;
  int s = 0;
  std::optional<HomCertificate> matching_certificate;  ///< into order-r target with blue matching of size s
  std::optional<HomCertificate> certificate;           ///< into RK_r^-

  bool hypotheses_hold() const { return family_free && degree_ok; }
};

/// Runs the structural argument for the even-index theorem as an algorithm
/// on g: no wicked triangles, equivalence classes of "weight <= 1", class
/// count m + s = r, bipartite blue graphs inside the blue classes, and a
/// certificate into RK_r^-. Hypotheses are checked and reported, never
/// assumed. r >= 3.
Decomposition decompose(const ColoredGraph& g, int r);

struct StructureReport {
  int r = 0;
  std::vector<Triple> wicked_triangles;
  std::vector<Triple> blue_wicked;
  SecureAudit audit;
  std::optional<Embedding> j_embedding;
  bool equivalence_ok = false;
  Decomposition decomposition;
};

StructureReport analyze(const ColoredGraph& g, int r);

}  // namespace wgraph
