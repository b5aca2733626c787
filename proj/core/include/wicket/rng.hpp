#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace wicket {

// splitmix64 step; the full 2^64 state cycle passes through every value once.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic RNG with identical output on every platform. All randomized
// library operations draw from this generator only, so a (seed, call sequence)
// pair fully determines results.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64_next(state_); }

  // Uniform draw from [0, bound); bound == 0 is a caller bug and returns 0.
  // Rejection sampling keeps the draw exactly uniform.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      const std::uint64_t v = next_u64();
      if (v < limit || limit == 0) return v % bound;
    }
  }

  // Fisher-Yates; permutation distribution is exactly uniform given below().
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// Stable sub-seed derivation: independent streams for (master, stream) pairs.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t s = master ^ (0x6a09e667f3bcc909ULL + stream * 0x3c6ef372fe94f82bULL);
  splitmix64_next(s);
  return splitmix64_next(s);
}

}  // namespace wicket
