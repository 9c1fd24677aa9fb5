#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wgraph/colored_graph.hpp"
#include "wgraph/enumerate.hpp"
#include "wgraph/homomorphism.hpp"
#include "wgraph/threshold.hpp"

namespace wgraph {

enum class ReportKind { TheoremVerify, ExValue, Threshold };
enum class Outcome { Verified, Counterexample, Value, NoValue, Inconclusive };
enum class TheoremKind { Odd, Even };

std::string to_string(ReportKind k);
std::string to_string(Outcome o);
std::string to_string(TheoremKind k);
std::string to_string(EnumerationMode m);

struct SearchOptions {
  EnumerationMode mode = EnumerationMode::Raw;
  unsigned threads = 1;
};

struct SearchStats {
  std::uint64_t enumerated = 0;  ///< graphs inspected
  std::uint64_t hypothesis = 0;  ///< graphs satisfying every hypothesis
  std::uint64_t nodes = 0;       ///< branch-and-bound nodes (ex only)
  double wall_seconds = 0.0;
};

/// Outcome of a verification or extremal search. Counterexamples and
/// witnesses are re-checked with the independent predicates before a report
/// is returned.
struct SearchReport {
  ReportKind kind = ReportKind::TheoremVerify;
  std::optional<TheoremKind> theorem;
  int r = 0;
  int n = 0;
  std::string family;
  std::optional<EnumerationMode> mode;
  int cap = 2;
  std::optional<Threshold> threshold;
  std::optional<std::int64_t> cutoff;  ///< smallest minimum degree satisfying the strict bound
  Outcome outcome = Outcome::Verified;
  std::optional<std::int64_t> value;
  std::optional<ColoredGraph> graph;
  std::string diagnosis;
  std::string note;
  SearchStats stats;
};

/// "Every family-free graph of order n with delta > threshold * n satisfies
/// the conclusion", checked over all graphs of order n.
struct Statement {
  std::string family_id;
  std::vector<ColoredGraph> family;
  Threshold threshold;
  std::string conclusion_name;  ///< e.g. "RK_3 homomorphism"
  std::function<HomResult(const ColoredGraph&)> conclusion;
};

/// Reports the counterexample from the lowest shard (the first one in
/// sequential order), after lowering its weights greedily while it stays a
/// counterexample. In isomorph-free mode the family filter prunes the
/// generation, so freeness is tested before the degree bound.
SearchReport verify_statement(const Statement& st, int n, const SearchOptions& opts = {});

/// Every F_{2r+1}-free graph on n vertices with delta > (6r-8)/(3r-1) n has
/// a homomorphism into RK_r; reports the first (minimised) counterexample.
SearchReport verify_theorem_odd(int r, int n, const SearchOptions& opts = {});

/// Every F_{2r}-free graph on n vertices with delta > (14r-24)/(7r-5) n has a
/// homomorphism into RK_r^-. r >= 3.
SearchReport verify_theorem_even(int r, int n, const SearchOptions& opts = {});

/// Exact maximum of e(G) over family-free graphs of order n with weights in
/// {0, ..., cap}, by branch and bound over the pairs in lexicographic order.
/// n <= 8, cap in {1, 2}.
SearchReport compute_ex(int n, const std::vector<ColoredGraph>& family, int cap, const SearchOptions& opts = {},
                        const std::string& family_id = "custom");

/// Largest minimum degree among family-free graphs of order n that admit no
/// homomorphism into the target (RK_r for odd, RK_r^- for even). A finite-n
/// lower-bound probe for the threshold.
SearchReport empirical_threshold(int n, int r, TheoremKind kind, const SearchOptions& opts = {});

struct DensityRow {
  std::string name;
  int n = 0;
  long e = 0;
  Threshold density;                   ///< 2 e / n^2
  std::optional<Threshold> reference;  ///< limiting density of the family, if known
};

/// 2e/n^2 for each construction next to the limiting density of `family`
/// when it is F_t for some t >= 3. Report only.
std::vector<DensityRow> density_report(const std::vector<ColoredGraph>& family,
                                       const std::vector<std::pair<std::string, ColoredGraph>>& constructions);

/// Limiting density of F_t: 2(t-3)/(t-1) for odd t, 2(3t-10)/(3t-4) for even t.
Threshold family_density(int t);

}  // namespace wgraph
