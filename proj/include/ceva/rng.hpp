#pragma once

// Deterministic seeded randomness for fuzz-style checks.  The engine is the
// standardized mt19937_64 sequence and the bounded sampler uses rejection,
// so identical seeds give identical draws on every platform; the library's
// standard distributions are avoided because their outputs are
// implementation-defined.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace ceva {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t v = eng_();
    while (v >= limit) v = eng_();
    return v % bound;
  }

  // k distinct values from [0, pool), ascending.
  std::vector<size_t> sample(size_t pool, size_t k) {
    if (k > pool) throw std::invalid_argument("Rng::sample: k > pool");
    std::vector<size_t> idx(pool);
    for (size_t i = 0; i < pool; ++i) idx[i] = i;
    for (size_t i = 0; i < k; ++i) {
      const size_t j = i + static_cast<size_t>(below(pool - i));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ceva
