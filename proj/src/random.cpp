#include "ramseq/random.hpp"

#include <cmath>

namespace ramseq {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection on the top of the range keeps the result unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

double Rng::exponential() { return -std::log1p(-uniform()); }

}  // namespace ramseq
