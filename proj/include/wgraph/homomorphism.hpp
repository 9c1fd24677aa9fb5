#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wgraph/colored_graph.hpp"

namespace wgraph {

enum class TargetKind { Rk, RkMinus, General };

std::string to_string(TargetKind k);

/// Partition certificate for a homomorphism. classes[i] is the preimage of
/// target vertex i (possibly empty).
///
/// - Rk: at most r classes, each a green clique.
/// - RkMinus: additionally no red pair between classes[0] and classes[1].
/// - General: weight(x, y) <= target(i, j) for x in class i, y in class j.
struct HomCertificate {
  TargetKind kind = TargetKind::Rk;
  int r = 0;
  ColoredGraph target;
  std::vector<std::vector<int>> classes;
};

enum class HomStatus { Found, None, BudgetExceeded };

std::string to_string(HomStatus s);

struct HomResult {
  HomStatus status = HomStatus::None;
  std::optional<HomCertificate> certificate;
  std::uint64_t nodes = 0;

  bool exists() const { return status == HomStatus::Found; }
};

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;

/// Partition into at most r green cliques, i.e. a proper r-colouring of the
/// graph of pairs with weight >= 1. r >= 1.
HomResult find_hom_rk(const ColoredGraph& g, int r, std::uint64_t budget = kDefaultNodeBudget);

/// Homomorphism into RK_r^-: at most r green cliques, the designated classes
/// 0 and 1 (either may be empty) span no red pair between them. r >= 2.
HomResult find_hom_rk_minus(const ColoredGraph& g, int r, std::uint64_t budget = kDefaultNodeBudget);

/// Arbitrary target: a map with w(x, y) <= target(phi x, phi y) for x != y.
HomResult find_hom_general(const ColoredGraph& g, const ColoredGraph& target,
                           std::uint64_t budget = kDefaultNodeBudget);

/// Checks every certificate condition against g by direct pair inspection.
/// Throws std::invalid_argument if the classes do not partition the vertex
/// set (overlap, missing vertex, index out of range).
bool verify_certificate(const ColoredGraph& g, const HomCertificate& c);

}  // namespace wgraph
