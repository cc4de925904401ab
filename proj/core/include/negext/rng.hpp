#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace negext {

// Deterministic RNG wrapper. std::mt19937_64 output is pinned by the
// standard, but the distributions are not, so bounded draws are done by
// rejection sampling here to keep datasets reproducible across stdlibs.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform real in [0, 1).
  double unit_real() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // k distinct indices drawn uniformly from [0, n), in draw order
  // (partial Fisher-Yates over an index table).
  std::vector<std::size_t> sample_without_replacement(std::size_t n,
                                                      std::size_t k);

 private:
  std::mt19937_64 engine_;
};

}  // namespace negext
