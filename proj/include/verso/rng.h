// Deterministic, seedable random generator with portable bounded draws.

#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace verso {

// std::mt19937_64 output is pinned by the standard, and the bounded draw
// below uses rejection sampling instead of std::uniform_int_distribution,
// so identical seeds produce identical draws on every platform.
//
// One stream drives a whole run, consumed in a fixed order:
//   1. meter resolution for unspecified slots, in slot order;
//   2. one shuffle of each letter's feasible group list, in first-appearance
//      order (backtracking afterwards consumes no randomness);
//   3. stanza-initial verse draws, in slot order.
// Candidate scoring never touches the stream.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  /// Uniform draw in [0, bound); bound must be positive.
  size_t uniform(size_t bound) {
    if (bound == 0) throw std::logic_error("Rng::uniform: zero bound");
    const uint64_t b = bound;
    const uint64_t limit = (std::numeric_limits<uint64_t>::max() / b) * b;
    uint64_t x = next();
    while (x >= limit) x = next();
    return static_cast<size_t>(x % b);
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[uniform(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

inline uint64_t entropySeed() {
  std::random_device device;
  return (static_cast<uint64_t>(device()) << 32) ^ device();
}

}  // namespace verso
