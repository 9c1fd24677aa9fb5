#include "wgraph/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "wgraph/constructions.hpp"
#include "wgraph/embedding.hpp"
#include "wgraph/homomorphism.hpp"

namespace wgraph {

std::string to_string(ReportKind k) {
  switch (k) {
    case ReportKind::TheoremVerify: return "theorem_verify";
    case ReportKind::ExValue: return "ex_value";
    case ReportKind::Threshold: return "threshold";
  }
  return "?";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Verified: return "verified";
    case Outcome::Counterexample: return "counterexample";
    case Outcome::Value: return "value";
    case Outcome::NoValue: return "no_value";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(TheoremKind k) { return k == TheoremKind::Odd ? "odd" : "even"; }

std::string to_string(EnumerationMode m) { return m == EnumerationMode::Raw ? "raw" : "iso"; }

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

constexpr std::size_t kNoHit = std::numeric_limits<std::size_t>::max();

// Runs shard 0..count-1 on `threads` workers. `work(shard, limit)` returns
// true when the shard produced a hit; shards above the smallest hit index are
// skipped, and running ones can poll `limit` to stop early. The smallest hit
// shard is therefore the same as in a sequential run.
void run_shards(std::size_t count, unsigned threads,
                const std::function<bool(std::size_t, const std::atomic<std::size_t>&)>& work) {
  std::atomic<std::size_t> limit{kNoHit};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t s = next++; s < count; s = next++) {
      if (s > limit.load()) continue;
      if (work(s, limit)) {
        std::size_t cur = limit.load();
        while (s < cur && !limit.compare_exchange_weak(cur, s)) {
        }
      }
    }
  };
  if (threads <= 1 || count <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

using Conclusion = std::function<HomResult(const ColoredGraph&)>;

bool satisfies_hypothesis(const ColoredGraph& g, const std::vector<ColoredGraph>& family, const Threshold& t) {
  return g.order() >= 1 && exceeds_threshold(min_degree(g), g.order(), t) && is_free(g, family).free;
}

bool is_counterexample(const ColoredGraph& g, const std::vector<ColoredGraph>& family, const Threshold& t,
                       const Conclusion& conclusion) {
  return satisfies_hypothesis(g, family, t) && conclusion(g).status == HomStatus::None;
}

// Lowers weights one step at a time while the graph stays a counterexample.
ColoredGraph minimise(ColoredGraph g, const std::vector<ColoredGraph>& family, const Threshold& t,
                      const Conclusion& conclusion) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < g.order(); ++x) {
      for (int y = x + 1; y < g.order(); ++y) {
        const int w = g.weight(x, y);
        if (w == 0) continue;
        g.set(x, y, w - 1);
        if (is_counterexample(g, family, t, conclusion)) {
          changed = true;
        } else {
          g.set(x, y, w);
        }
      }
    }
  }
  return g;
}

struct ShardFind {
  std::uint64_t enumerated = 0;
  std::uint64_t hypothesis = 0;
  std::optional<ColoredGraph> hit;
  bool inconclusive = false;
};

}  // namespace

SearchReport verify_statement(const Statement& st, int n, const SearchOptions& opts) {
  const auto& family = st.family;
  const Threshold& t = st.threshold;
  const Conclusion& conclusion = st.conclusion;
  const auto t0 = Clock::now();
  if (n < 1) throw std::invalid_argument("theorem verification needs n >= 1");
  SearchReport rep;
  rep.kind = ReportKind::TheoremVerify;
  rep.n = n;
  rep.family = st.family_id;
  rep.mode = opts.mode;
  rep.threshold = t;
  rep.cutoff = t.cutoff(n);

  // Freeness is hereditary, so the isomorph-free generator can prune with it.
  GraphFilter filter;
  if (opts.mode == EnumerationMode::IsomorphFree) {
    filter = [&family](const ColoredGraph& g) { return is_free(g, family).free; };
  }
  const EnumerationPlan plan(n, opts.mode, filter);
  std::vector<ShardFind> results(plan.shard_count());

  run_shards(plan.shard_count(), opts.threads, [&](std::size_t shard, const std::atomic<std::size_t>& limit) {
    ShardFind& out = results[shard];
    plan.run_shard(shard, [&](const ColoredGraph& g) {
      ++out.enumerated;
      if ((out.enumerated & 0xFFF) == 0 && limit.load(std::memory_order_relaxed) < shard) return false;
      if (!exceeds_threshold(min_degree(g), n, t)) return true;
      if (!filter && !is_free(g, family).free) return true;
      ++out.hypothesis;
      const HomResult h = conclusion(g);
      if (h.status == HomStatus::Found) return true;
      out.hit = g;
      out.inconclusive = h.status == HomStatus::BudgetExceeded;
      return false;
    });
    return out.hit.has_value();
  });

  std::optional<std::size_t> first;
  for (std::size_t s = 0; s < results.size(); ++s) {
    if (results[s].hit && !first) first = s;
  }
  // Statistics cover shards up to the reported hit, as in a sequential run.
  for (std::size_t s = 0; s < results.size(); ++s) {
    if (first && s > *first) break;
    rep.stats.enumerated += results[s].enumerated;
    rep.stats.hypothesis += results[s].hypothesis;
  }

  if (!first) {
    rep.outcome = Outcome::Verified;
  } else if (results[*first].inconclusive) {
    rep.outcome = Outcome::Inconclusive;
    rep.graph = results[*first].hit;
    rep.diagnosis = "homomorphism search exceeded its node budget";
  } else {
    ColoredGraph cex = minimise(*results[*first].hit, family, t, conclusion);
    if (!is_counterexample(cex, family, t, conclusion)) {
      throw std::logic_error("counterexample failed independent re-verification");
    }
    rep.outcome = Outcome::Counterexample;
    rep.diagnosis = "hypotheses hold (delta = " + std::to_string(min_degree(cex)) + ", family-free) but no " +
                    st.conclusion_name + " exists";
    rep.graph = std::move(cex);
  }
  rep.stats.wall_seconds = seconds_since(t0);
  return rep;
}

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t p = 1;
  for (int i = 0; i < e; ++i) p *= b;
  return p;
}

bool creates_member(const ColoredGraph& g, const std::vector<ColoredGraph>& family, int u, int v) {
  for (const auto& f : family) {
    if (find_embedding_through(f, g, u, v)) return true;
  }
  return false;
}

struct ExShard {
  std::int64_t best = -1;
  std::optional<ColoredGraph> witness;
  std::uint64_t nodes = 0;
};

class ExSearch {
 public:
  ExSearch(int n, const std::vector<ColoredGraph>& family, int cap, std::atomic<std::int64_t>& global)
      : family_(family), cap_(cap), global_(global), g_(n) {
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) pairs_.push_back({x, y});
    }
  }

  int pair_total() const { return static_cast<int>(pairs_.size()); }

  // Fixes the first `k` pairs from the digits of `shard`; false if the prefix
  // already contains a family member.
  bool apply_prefix(std::uint64_t shard, int k, std::int64_t& sum) {
    std::vector<int> digits(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(shard % static_cast<std::uint64_t>(cap_ + 1));
      shard /= static_cast<std::uint64_t>(cap_ + 1);
    }
    sum = 0;
    for (int i = 0; i < k; ++i) {
      const auto [x, y] = pairs_[i];
      g_.set(x, y, digits[i]);
      sum += digits[i];
      if (digits[i] > 0 && creates_member(g_, family_, x, y)) return false;
    }
    return true;
  }

  void dfs(int idx, std::int64_t sum, ExShard& out) {
    ++out.nodes;
    const std::int64_t bound = sum + static_cast<std::int64_t>(cap_) * (pair_total() - idx);
    if (bound <= out.best || bound < global_.load(std::memory_order_relaxed)) return;
    if (idx == pair_total()) {
      out.best = sum;
      out.witness = g_;
      std::int64_t cur = global_.load();
      while (sum > cur && !global_.compare_exchange_weak(cur, sum)) {
      }
      return;
    }
    const auto [x, y] = pairs_[idx];
    for (int w = cap_; w >= 0; --w) {
      g_.set(x, y, w);
      if (w > 0 && creates_member(g_, family_, x, y)) continue;
      dfs(idx + 1, sum + w, out);
    }
    g_.set(x, y, 0);
  }

 private:
  const std::vector<ColoredGraph>& family_;
  int cap_;
  std::atomic<std::int64_t>& global_;
  ColoredGraph g_;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace

SearchReport verify_theorem_odd(int r, int n, const SearchOptions& opts) {
  if (r < 2) throw std::invalid_argument("the odd-index theorem needs r >= 2");
  const Statement st{"F:" + std::to_string(2 * r + 1), gen_family(2 * r + 1), odd_threshold(r),
                     "RK_" + std::to_string(r) + " homomorphism",
                     [r](const ColoredGraph& g) { return find_hom_rk(g, r); }};
  SearchReport rep = verify_statement(st, n, opts);
  rep.theorem = TheoremKind::Odd;
  rep.r = r;
  return rep;
}

SearchReport verify_theorem_even(int r, int n, const SearchOptions& opts) {
  if (r < 3) throw std::invalid_argument("the even-index theorem needs r >= 3");
  const Statement st{"F:" + std::to_string(2 * r), gen_family(2 * r), even_threshold(r),
                     "RK_" + std::to_string(r) + "^- homomorphism",
                     [r](const ColoredGraph& g) { return find_hom_rk_minus(g, r); }};
  SearchReport rep = verify_statement(st, n, opts);
  rep.theorem = TheoremKind::Even;
  rep.r = r;
  return rep;
}

SearchReport compute_ex(int n, const std::vector<ColoredGraph>& family, int cap, const SearchOptions& opts,
                        const std::string& family_id) {
  const auto t0 = Clock::now();
  if (n < 0 || n > kIsomorphFreeBound) throw std::invalid_argument("compute_ex supports 0 <= n <= 8");
  if (cap != 1 && cap != 2) throw std::invalid_argument("weight cap must be 1 or 2");
  SearchReport rep;
  rep.kind = ReportKind::ExValue;
  rep.n = n;
  rep.family = family_id;
  rep.cap = cap;

  for (const auto& f : family) {
    bool positive = false;
    for (int x = 0; x < f.order() && !positive; ++x) positive = f.positive(x) != 0;
    if (!positive && f.order() <= n) {
      rep.outcome = Outcome::NoValue;
      rep.diagnosis = "a family member without positive pairs embeds in every graph of order " + std::to_string(n);
      rep.stats.wall_seconds = seconds_since(t0);
      return rep;
    }
  }

  std::atomic<std::int64_t> global{-1};
  const int total = pair_count(n);
  const int k = std::min(total, 4);
  const std::size_t shards = static_cast<std::size_t>(ipow(static_cast<std::uint64_t>(cap + 1), k));
  std::vector<ExShard> results(shards);
  run_shards(shards, opts.threads, [&](std::size_t shard, const std::atomic<std::size_t>&) {
    ExSearch search(n, family, cap, global);
    std::int64_t sum = 0;
    if (search.apply_prefix(shard, k, sum)) search.dfs(k, sum, results[shard]);
    return false;
  });

  std::optional<std::size_t> best;
  for (std::size_t s = 0; s < shards; ++s) {
    rep.stats.nodes += results[s].nodes;
    if (results[s].witness && (!best || results[s].best > results[*best].best)) best = s;
  }
  rep.stats.enumerated = rep.stats.nodes;
  if (!best) {
    rep.outcome = Outcome::NoValue;
    rep.diagnosis = "no family-free graph of this order";
  } else {
    const ColoredGraph& w = *results[*best].witness;
    if (!is_free(w, family).free || edge_weight_sum(w) != results[*best].best) {
      throw std::logic_error("extremal witness failed independent re-verification");
    }
    rep.outcome = Outcome::Value;
    rep.value = results[*best].best;
    rep.graph = w;
  }
  rep.stats.wall_seconds = seconds_since(t0);
  return rep;
}

SearchReport empirical_threshold(int n, int r, TheoremKind kind, const SearchOptions& opts) {
  const auto t0 = Clock::now();
  if (n < 1) throw std::invalid_argument("empirical_threshold needs n >= 1");
  const bool odd = kind == TheoremKind::Odd;
  if (odd && r < 2) throw std::invalid_argument("odd threshold probe needs r >= 2");
  if (!odd && r < 3) throw std::invalid_argument("even threshold probe needs r >= 3");
  const auto family = gen_family(odd ? 2 * r + 1 : 2 * r);
  const Threshold t = odd ? odd_threshold(r) : even_threshold(r);
  const Conclusion conclusion = odd ? Conclusion([r](const ColoredGraph& g) { return find_hom_rk(g, r); })
                                    : Conclusion([r](const ColoredGraph& g) { return find_hom_rk_minus(g, r); });

  SearchReport rep;
  rep.kind = ReportKind::Threshold;
  rep.theorem = kind;
  rep.r = r;
  rep.n = n;
  rep.family = "F:" + std::to_string(odd ? 2 * r + 1 : 2 * r);
  rep.mode = opts.mode;
  rep.threshold = t;
  rep.cutoff = t.cutoff(n);
  rep.note = "finite-n lower-bound probe: the threshold is an infimum over all orders";

  GraphFilter filter;
  if (opts.mode == EnumerationMode::IsomorphFree) {
    filter = [&family](const ColoredGraph& g) { return is_free(g, family).free; };
  }
  const EnumerationPlan plan(n, opts.mode, filter);
  struct Local {
    std::int64_t best = -1;
    std::optional<ColoredGraph> witness;
    std::uint64_t enumerated = 0;
    std::uint64_t hypothesis = 0;
    bool inconclusive = false;
  };
  std::vector<Local> results(plan.shard_count());
  std::atomic<std::int64_t> global{-1};
  run_shards(plan.shard_count(), opts.threads, [&](std::size_t shard, const std::atomic<std::size_t>&) {
    Local& out = results[shard];
    plan.run_shard(shard, [&](const ColoredGraph& g) {
      ++out.enumerated;
      const int d = min_degree(g);
      if (d <= out.best || d < global.load(std::memory_order_relaxed)) return true;
      if (!filter && !is_free(g, family).free) return true;
      ++out.hypothesis;
      const HomResult h = conclusion(g);
      if (h.status == HomStatus::Found) return true;
      if (h.status == HomStatus::BudgetExceeded) {
        out.inconclusive = true;
        return false;
      }
      out.best = d;
      out.witness = g;
      std::int64_t cur = global.load();
      while (d > cur && !global.compare_exchange_weak(cur, d)) {
      }
      return true;
    });
    return false;
  });

  std::optional<std::size_t> best;
  bool inconclusive = false;
  for (std::size_t s = 0; s < results.size(); ++s) {
    rep.stats.enumerated += results[s].enumerated;
    rep.stats.hypothesis += results[s].hypothesis;
    inconclusive = inconclusive || results[s].inconclusive;
    if (results[s].witness && (!best || results[s].best > results[*best].best)) best = s;
  }
  if (inconclusive) {
    rep.outcome = Outcome::Inconclusive;
    rep.diagnosis = "homomorphism search exceeded its node budget";
  } else if (!best) {
    rep.outcome = Outcome::NoValue;
    rep.diagnosis = "every family-free graph of this order admits the homomorphism";
  } else {
    const ColoredGraph& w = *results[*best].witness;
    if (!is_free(w, family).free || conclusion(w).status != HomStatus::None) {
      throw std::logic_error("threshold witness failed independent re-verification");
    }
    rep.outcome = Outcome::Value;
    rep.value = results[*best].best;
    rep.graph = w;
  }
  rep.stats.wall_seconds = seconds_since(t0);
  return rep;
}

Threshold family_density(int t) {
  if (t < 3) throw std::invalid_argument("limiting density is only tabulated for t >= 3");
  if (t % 2 == 1) return {2 * (t - 3), t - 1};
  return {2 * (3 * t - 10), 3 * t - 4};
}

std::vector<DensityRow> density_report(const std::vector<ColoredGraph>& family,
                                       const std::vector<std::pair<std::string, ColoredGraph>>& constructions) {
  std::vector<DensityRow> rows;
  if (family.empty()) return rows;
  std::optional<Threshold> reference;
  const int t = family.front().order() + 1;
  if (t >= 3 && gen_family(t) == family) reference = family_density(t);
  for (const auto& [name, g] : constructions) {
    if (g.order() < 1) throw std::invalid_argument("density of the empty graph is undefined");
    DensityRow row;
    row.name = name;
    row.n = g.order();
    row.e = edge_weight_sum(g);
    row.density = Threshold(2 * row.e, static_cast<std::int64_t>(row.n) * row.n);
    row.reference = reference;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace wgraph
