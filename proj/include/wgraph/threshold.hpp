#pragma once

#include <cstdint>
#include <string>

namespace wgraph {

/// Exact rational num/den with den > 0, kept in lowest terms.
///
/// Minimum-degree hypotheses are strict comparisons d > (num/den) n and are
/// always evaluated in integer arithmetic.
class Threshold {
 public:
  Threshold() = default;
  Threshold(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// Smallest integer d with d > (num/den) n.
  std::int64_t cutoff(std::int64_t n) const;

  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend bool operator==(const Threshold&, const Threshold&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// True iff d * den > num * n, exactly. Requires n >= 1.
bool exceeds_threshold(std::int64_t d, std::int64_t n, const Threshold& t);

/// (6r-8)/(3r-1): the odd-index weighted threshold.
Threshold odd_threshold(int r);
/// (14r-24)/(7r-5): the even-index weighted threshold.
Threshold even_threshold(int r);
/// (3r-4)/(3r-1): the classical simple-graph threshold.
Threshold simple_threshold(int r);

}  // namespace wgraph
