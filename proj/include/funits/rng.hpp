#pragma once

#include <cstdint>

namespace funits {

// Root seed for every stochastic operation. Identical seed + identical
// inputs must give bit-identical outputs everywhere.
struct Seed {
  std::uint64_t value = 0;
};

// Splittable deterministic generator built on splitmix64. Sub-streams are
// derived from the *root* seed and a tag, never from the evolving state, so
// how many draws one consumer makes cannot shift another consumer's stream.
class SplitRng {
 public:
  explicit SplitRng(Seed seed) : root_(seed.value), state_(seed.value) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in (0, 1]
  double next_open_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // uniform integer in [0, bound), bound > 0
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  SplitRng split(std::uint64_t tag) const {
    // one splitmix64 scramble of (root, tag) to seed the sub-stream
    std::uint64_t z = root_ + (tag + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return SplitRng(Seed{z ^ (z >> 31)});
  }

 private:
  std::uint64_t root_;
  std::uint64_t state_;
};

}  // namespace funits
