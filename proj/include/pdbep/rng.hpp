#pragma once

#include <cstdint>
#include <vector>

namespace pdbep {

// splitmix64. Self-contained so generated streams are identical across
// standard libraries and platforms; std:: distributions are not.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), unbiased. bound must be >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  // Fisher-Yates.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

// Stable derivation of a per-item stream from a base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 mix(base ^ (0xd1342543de82ef95ull * (index + 1)));
  return mix.next();
}

}  // namespace pdbep
