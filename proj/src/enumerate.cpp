#include "wgraph/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "wgraph/canonical.hpp"

namespace wgraph {

namespace {

std::uint64_t pow3(int k) {
  std::uint64_t p = 1;
  for (int i = 0; i < k; ++i) p *= 3;
  return p;
}

struct PairRef {
  int x;
  int y;
};

std::vector<PairRef> pairs_of(int n) {
  std::vector<PairRef> out;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) out.push_back({x, y});
  }
  return out;
}

// Depth-first canonical augmentation. A child is kept when the added vertex
// and the vertex labelled last by the canonical labeling leave isomorphic
// graphs on deletion; duplicates among the children of one parent are
// removed by code.
class Augmenter {
 public:
  Augmenter(int target, const GraphFilter& filter, const Visitor& visit, EnumerationStats& stats)
      : target_(target), filter_(filter), visit_(visit), stats_(stats) {}

  // Returns false when the visitor asked to stop.
  bool extend(const ColoredGraph& parent, std::uint64_t parent_code) {
    const int k = parent.order();
    const std::uint64_t combos = pow3(k);
    std::unordered_set<std::uint64_t> seen;
    std::vector<int> w(static_cast<std::size_t>(k), 0);
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::uint64_t rest = c;
      for (int i = k - 1; i >= 0; --i) {
        w[i] = static_cast<int>(rest % 3);
        rest /= 3;
      }
      ColoredGraph child = parent.with_vertex(w);
      ++stats_.candidates;
      const auto lab = refined_labeling(child);
      if (seen.count(lab.code)) continue;
      const int last = lab.labeling.back();
      if (last != k && refined_labeling(child.without_vertex(last)).code != parent_code) continue;
      seen.insert(lab.code);
      if (filter_ && !filter_(child)) continue;
      if (k + 1 == target_) {
        ++stats_.visited;
        if (!visit_(child)) {
          stats_.stopped = true;
          return false;
        }
      } else if (!extend(child, lab.code)) {
        return false;
      }
    }
    return true;
  }

  // Collects the class representatives of order `level` instead of visiting.
  void collect(const ColoredGraph& parent, std::uint64_t parent_code, int level, std::vector<ColoredGraph>& out,
               std::vector<std::uint64_t>& codes) {
    const int k = parent.order();
    const std::uint64_t combos = pow3(k);
    std::unordered_set<std::uint64_t> seen;
    std::vector<int> w(static_cast<std::size_t>(k), 0);
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::uint64_t rest = c;
      for (int i = k - 1; i >= 0; --i) {
        w[i] = static_cast<int>(rest % 3);
        rest /= 3;
      }
      ColoredGraph child = parent.with_vertex(w);
      ++stats_.candidates;
      const auto lab = refined_labeling(child);
      if (seen.count(lab.code)) continue;
      const int last = lab.labeling.back();
      if (last != k && refined_labeling(child.without_vertex(last)).code != parent_code) continue;
      seen.insert(lab.code);
      if (filter_ && !filter_(child)) continue;
      if (k + 1 == level) {
        out.push_back(std::move(child));
        codes.push_back(lab.code);
      } else {
        collect(child, lab.code, level, out, codes);
      }
    }
  }

 private:
  int target_;
  const GraphFilter& filter_;
  const Visitor& visit_;
  EnumerationStats& stats_;
};

}  // namespace

EnumerationPlan::EnumerationPlan(int n, EnumerationMode mode, GraphFilter filter)
    : n_(n), mode_(mode), filter_(std::move(filter)) {
  if (n < 0) throw std::invalid_argument("enumeration order must be nonnegative");
  if (mode == EnumerationMode::Raw) {
    if (n > kRawBound) {
      throw std::invalid_argument("raw enumeration is limited to n <= " + std::to_string(kRawBound) + ", got " +
                                  std::to_string(n));
    }
    prefix_pairs_ = std::min(pair_count(n), 6);
    return;
  }
  if (n > kIsomorphFreeBound) {
    throw std::invalid_argument("isomorph-free enumeration is limited to n <= " +
                                std::to_string(kIsomorphFreeBound) + ", got " + std::to_string(n));
  }
  if (n <= 2) return;
  // Roots: all classes of order n - 2 that pass the filter.
  const int level = n - 2;
  ColoredGraph seed(1);
  if (filter_ && !filter_(seed)) return;
  if (level == 1) {
    roots_.push_back(seed);
    root_codes_.push_back(0);
    return;
  }
  EnumerationStats dummy;
  Visitor none;
  Augmenter aug(level, filter_, none, dummy);
  aug.collect(seed, 0, level, roots_, root_codes_);
}

std::size_t EnumerationPlan::shard_count() const {
  if (mode_ == EnumerationMode::Raw) return static_cast<std::size_t>(pow3(prefix_pairs_));
  if (n_ <= 2) return 1;
  return roots_.size();
}

EnumerationStats EnumerationPlan::run_shard(std::size_t shard, const Visitor& visit) const {
  EnumerationStats stats;
  if (shard >= shard_count()) throw std::out_of_range("shard index out of range");

  if (mode_ == EnumerationMode::Raw) {
    const auto pairs = pairs_of(n_);
    const int total = static_cast<int>(pairs.size());
    ColoredGraph g(n_);
    std::uint64_t rest = shard;
    for (int i = prefix_pairs_ - 1; i >= 0; --i) {
      g.set(pairs[i].x, pairs[i].y, static_cast<int>(rest % 3));
      rest /= 3;
    }
    std::vector<int> digits(static_cast<std::size_t>(total), 0);
    for (;;) {
      ++stats.candidates;
      if (!filter_ || filter_(g)) {
        ++stats.visited;
        if (!visit(g)) {
          stats.stopped = true;
          return stats;
        }
      }
      int i = total - 1;
      while (i >= prefix_pairs_ && digits[i] == 2) {
        digits[i] = 0;
        g.set(pairs[i].x, pairs[i].y, 0);
        --i;
      }
      if (i < prefix_pairs_) break;
      ++digits[i];
      g.set(pairs[i].x, pairs[i].y, digits[i]);
    }
    return stats;
  }

  if (n_ <= 2) {
    // Orders 0..2 are listed directly: one class per weight of the single pair.
    std::vector<ColoredGraph> graphs;
    if (n_ < 2) {
      graphs.emplace_back(n_);
    } else {
      for (int w = 0; w < 3; ++w) graphs.push_back(ColoredGraph::from_pairs(2, {w}));
    }
    for (const auto& g : graphs) {
      ++stats.candidates;
      if (filter_ && !filter_(g)) continue;
      if (n_ == 2 && filter_ && !filter_(ColoredGraph(1))) continue;
      ++stats.visited;
      if (!visit(g)) {
        stats.stopped = true;
        break;
      }
    }
    return stats;
  }

  Augmenter aug(n_, filter_, visit, stats);
  aug.extend(roots_[shard], root_codes_[shard]);
  return stats;
}

EnumerationStats enumerate(int n, EnumerationMode mode, const Visitor& visit, unsigned threads,
                           const GraphFilter& filter) {
  const EnumerationPlan plan(n, mode, filter);
  const std::size_t shards = plan.shard_count();
  EnumerationStats total;
  if (threads <= 1 || shards <= 1) {
    for (std::size_t s = 0; s < shards; ++s) {
      total += plan.run_shard(s, visit);
      if (total.stopped) break;
    }
    return total;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex merge;
  const Visitor guarded = [&](const ColoredGraph& g) {
    if (stop.load(std::memory_order_relaxed)) return false;
    if (!visit(g)) {
      stop = true;
      return false;
    }
    return true;
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      EnumerationStats local;
      for (std::size_t s = next++; s < shards && !stop; s = next++) local += plan.run_shard(s, guarded);
      std::lock_guard lock(merge);
      total += local;
    });
  }
  for (auto& th : pool) th.join();
  total.stopped = stop;
  return total;
}

}  // namespace wgraph
