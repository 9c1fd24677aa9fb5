#include "wgraph/threshold.hpp"

#include <numeric>
#include <stdexcept>

namespace wgraph {

Threshold::Threshold(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("threshold denominator must be nonzero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Threshold::cutoff(std::int64_t n) const {
  const __int128 p = static_cast<__int128>(num_) * n;
  // floor(p / den) + 1
  __int128 q = p / den_;
  if (p % den_ != 0 && p < 0) --q;
  return static_cast<std::int64_t>(q + 1);
}

std::string Threshold::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

bool exceeds_threshold(std::int64_t d, std::int64_t n, const Threshold& t) {
  if (n < 1) throw std::invalid_argument("threshold comparison needs n >= 1");
  return static_cast<__int128>(d) * t.den() > static_cast<__int128>(t.num()) * n;
}

Threshold odd_threshold(int r) {
  if (r < 2) throw std::invalid_argument("odd threshold needs r >= 2");
  return {6 * r - 8, 3 * r - 1};
}

Threshold even_threshold(int r) {
  if (r < 3) throw std::invalid_argument("even threshold needs r >= 3");
  return {14 * r - 24, 7 * r - 5};
}

Threshold simple_threshold(int r) {
  if (r < 2) throw std::invalid_argument("threshold needs r >= 2");
  return {3 * r - 4, 3 * r - 1};
}

}  // namespace wgraph
