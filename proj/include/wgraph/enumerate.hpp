#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "wgraph/colored_graph.hpp"

namespace wgraph {

enum class EnumerationMode { Raw, IsomorphFree };

inline constexpr int kRawBound = 6;
inline constexpr int kIsomorphFreeBound = 8;

/// Return false to stop the enumeration.
using Visitor = std::function<bool(const ColoredGraph&)>;

/// Optional predicate restricting the enumeration to graphs that satisfy it.
/// In isomorph-free mode rejected graphs are also not extended, so the
/// predicate must be hereditary (closed under deleting vertices).
using GraphFilter = std::function<bool(const ColoredGraph&)>;

struct EnumerationStats {
  std::uint64_t visited = 0;     ///< graphs handed to the visitor
  std::uint64_t candidates = 0;  ///< graphs generated before filtering / isomorph rejection
  bool stopped = false;          ///< visitor asked to stop

  EnumerationStats& operator+=(const EnumerationStats& o) {
    visited += o.visited;
    candidates += o.candidates;
    stopped = stopped || o.stopped;
    return *this;
  }
};

/// The enumeration space cut into independently runnable shards. Raw mode
/// shards by the weights of the first pairs in row-major order, so shard
/// order is lexicographic order; isomorph-free mode shards by the class
/// representatives two levels below the requested order.
class EnumerationPlan {
 public:
  EnumerationPlan(int n, EnumerationMode mode, GraphFilter filter = {});

  int order() const { return n_; }
  EnumerationMode mode() const { return mode_; }
  std::size_t shard_count() const;
  EnumerationStats run_shard(std::size_t shard, const Visitor& visit) const;

 private:
  int n_;
  EnumerationMode mode_;
  GraphFilter filter_;
  int prefix_pairs_ = 0;                 // raw
  std::vector<ColoredGraph> roots_;      // isomorph-free
  std::vector<std::uint64_t> root_codes_;
};

/// Visits every coloured graph on n vertices once (raw), or one graph per
/// isomorphism class (isomorph-free). With threads > 1 the visitor is called
/// concurrently and must be thread safe.
EnumerationStats enumerate(int n, EnumerationMode mode, const Visitor& visit, unsigned threads = 1,
                           const GraphFilter& filter = {});

}  // namespace wgraph
