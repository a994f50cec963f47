#ifndef QOT_PRNG_HPP
#define QOT_PRNG_HPP

// Deterministic random selection for scenario generation. std::shuffle and
// the standard distribution adapters are allowed to differ between standard
// library implementations, so anything a config seed is supposed to pin down
// goes through this generator and permutation routine instead.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace qot {

// Steele, Lea and Flood's 64-bit mix generator. Full 2^64 period, passes
// BigCrush, and is simple enough that two implementations cannot disagree.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

// Fisher-Yates permutation of 0..n-1, consuming exactly n-1 draws (none for
// n < 2). The modulo bias is negligible for the channel counts involved and
// keeps the draw sequence trivially reproducible in other languages.
inline std::vector<std::size_t> shuffled_indices(std::size_t n, SplitMix64& rng) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = n; i-- > 1;) {
    std::size_t j = static_cast<std::size_t>(rng.next() % (i + 1));
    std::swap(idx[i], idx[j]);
  }
  return idx;
}

}  // namespace qot

#endif  // QOT_PRNG_HPP
